#include "knotcalc/knots.hpp"

#include <numeric>

#include "knotcalc/errors.hpp"
#include "knotcalc/polynomial.hpp"
#include "text_cursor.hpp"

namespace knotcalc {

struct KnotExpr::Node {
  Kind kind = Kind::Unknot;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<KnotExpr> children;
};

KnotExpr::KnotExpr() : node_(unknot().node_) {}

KnotExpr KnotExpr::unknot() {
  static const auto node = std::make_shared<const Node>();
  return KnotExpr(node);
}

KnotExpr KnotExpr::torus(std::int64_t p, std::int64_t q) {
  if (p < 0 && q < 0) throw ConstraintError("torus parameters may not both be negative");
  // |p| >= 2 rules out INT64_MIN as well.
  if (p == 0 || q == 0 || p == 1 || q == 1 || p == -1 || q == -1 || p == INT64_MIN || q == INT64_MIN) {
    throw ConstraintError("torus(" + std::to_string(p) + "," + std::to_string(q) + "): need |p|, |q| >= 2");
  }
  if (std::gcd(p, q) != 1) {
    throw ConstraintError("torus(" + std::to_string(p) + "," + std::to_string(q) + "): parameters are not coprime");
  }
  if (p < 0 || q < 0) return mirror(torus(p < 0 ? -p : p, q < 0 ? -q : q));
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Torus, p, q, {}}));
}

KnotExpr KnotExpr::family_k(std::int64_t n) {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::FamilyK, n, 0, {}}));
}

KnotExpr KnotExpr::cable2(std::int64_t q, KnotExpr companion) {
  if (q % 2 == 0) throw ConstraintError("cable2(" + std::to_string(q) + ";...): q must be odd");
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Cable2, 0, q, {std::move(companion)}}));
}

KnotExpr KnotExpr::sum(std::vector<KnotExpr> parts) {
  if (parts.empty()) throw ConstraintError("sum of no knots");
  if (parts.size() == 1) return parts.front();
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, 0, std::move(parts)}));
}

KnotExpr KnotExpr::mirror(KnotExpr inner) {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Mirror, 0, 0, {std::move(inner)}}));
}

KnotExpr KnotExpr::family_sum(std::int64_t m, std::int64_t n) {
  if (m < 1) throw ConstraintError("K^{m,n} needs m >= 1");
  std::vector<KnotExpr> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) parts.push_back(family_k(n + i));
  return sum(std::move(parts));
}

KnotExpr::Kind KnotExpr::kind() const noexcept { return node_->kind; }
std::int64_t KnotExpr::p() const noexcept { return node_->a; }
std::int64_t KnotExpr::q() const noexcept { return node_->b; }

const KnotExpr& KnotExpr::child() const {
  if (node_->kind != Kind::Cable2 && node_->kind != Kind::Mirror) throw ConstraintError("expression has no child");
  return node_->children.front();
}

const std::vector<KnotExpr>& KnotExpr::parts() const {
  if (node_->kind != Kind::Sum) throw ConstraintError("expression is not a sum");
  return node_->children;
}

bool operator==(const KnotExpr& x, const KnotExpr& y) {
  if (x.node_ == y.node_) return true;
  return x.node_->kind == y.node_->kind && x.node_->a == y.node_->a && x.node_->b == y.node_->b &&
         x.node_->children == y.node_->children;
}

std::string KnotExpr::to_string() const {
  switch (node_->kind) {
    case Kind::Unknot:
      return "unknot";
    case Kind::Torus:
      return "torus(" + std::to_string(p()) + "," + std::to_string(q()) + ")";
    case Kind::FamilyK:
      return "K(" + std::to_string(n()) + ")";
    case Kind::Cable2:
      return "cable2(" + std::to_string(q()) + ";" + child().to_string() + ")";
    case Kind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) out += ",";
        out += parts()[i].to_string();
      }
      return out + ")";
    }
    case Kind::Mirror:
      return "mirror(" + child().to_string() + ")";
  }
  return {};
}

namespace {

template <class Build>
KnotExpr checked(std::size_t offset, Build build) {
  try {
    return build();
  } catch (const ConstraintError& e) {
    throw ConstraintError(std::string(e.what()) + " (at byte " + std::to_string(offset) + ")");
  }
}

KnotExpr parse_node(detail::TextCursor& cur) {
  cur.skip_space();
  const std::size_t start = cur.offset();
  if (cur.consume("unknot")) return KnotExpr::unknot();
  if (cur.consume("torus")) {
    cur.expect('(');
    std::int64_t p = cur.read_int64();
    cur.expect(',');
    std::int64_t q = cur.read_int64();
    if (cur.peek() == ',') cur.fail("torus takes exactly two parameters");
    cur.expect(')');
    return checked(start, [&] { return KnotExpr::torus(p, q); });
  }
  if (cur.consume("cable2")) {
    cur.expect('(');
    std::int64_t q = cur.read_int64();
    cur.expect(';');
    KnotExpr companion = parse_node(cur);
    cur.expect(')');
    return checked(start, [&] { return KnotExpr::cable2(q, companion); });
  }
  if (cur.consume("sum")) {
    cur.expect('(');
    std::vector<KnotExpr> parts{parse_node(cur)};
    while (cur.consume(',')) parts.push_back(parse_node(cur));
    if (parts.size() < 2) cur.fail("sum needs at least two parts");
    cur.expect(')');
    return KnotExpr::sum(std::move(parts));
  }
  if (cur.consume("mirror")) {
    cur.expect('(');
    KnotExpr inner = parse_node(cur);
    cur.expect(')');
    return KnotExpr::mirror(std::move(inner));
  }
  if (cur.consume('K')) {
    cur.expect('(');
    std::int64_t n = cur.read_int64();
    cur.expect(')');
    return KnotExpr::family_k(n);
  }
  cur.fail("expected unknot, torus, K, cable2, sum or mirror");
}

}  // namespace

KnotExpr KnotExpr::parse(std::string_view text) {
  detail::TextCursor cur(text);
  KnotExpr k = parse_node(cur);
  if (!cur.at_end()) cur.fail("trailing input");
  return k;
}

SymPoly alexander_torus_two_strand(std::int64_t r) {
  if (r < 1) throw ConstraintError("T(2,2r+1) needs r >= 1");
  // (-1)^r (1 + sum_{k=1}^r (-1)^k T_k)
  const Int sign = (r % 2 == 0) ? 1 : -1;
  SymPoly::CoefficientMap coeffs;
  for (std::int64_t k = 1; k <= r; ++k) coeffs.emplace(k, (k % 2 == 0) ? sign : Int(-sign));
  return SymPoly(sign, coeffs);
}

SymPoly alexander_torus_by_division(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw ConstraintError("torus division needs coprime p, q >= 2");
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  const IntPoly one = IntPoly::monomial(Int(1), 0);
  auto t_pow_minus_one = [&](std::size_t e) { return IntPoly::monomial(Int(1), e) - one; };
  const IntPoly numerator = t_pow_minus_one(up * uq) * t_pow_minus_one(1);
  const IntPoly denominator = t_pow_minus_one(up) * t_pow_minus_one(uq);
  auto [quotient, ok] = divide_exact(numerator, denominator);
  if (!ok) throw InternalError("torus Alexander division left a remainder");
  return symmetrize(quotient);
}

namespace {

SymPoly torus_two_q(std::int64_t q) {
  // Alexander polynomial of T(2,q) for any odd q; T(2,+-1) is the unknot.
  std::int64_t aq = q < 0 ? -q : q;
  if (aq == 1) return SymPoly(Int(1));
  return alexander_torus_two_strand((aq - 1) / 2);
}

}  // namespace

SymPoly alexander(const KnotExpr& k) {
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      return SymPoly(Int(1));
    case KnotExpr::Kind::FamilyK: {
      const Int n = to_int(k.n());
      return SymPoly(Int(-(2 * n - 1)), {{1, n}});
    }
    case KnotExpr::Kind::Torus:
      if (k.p() == 2) return alexander_torus_two_strand((k.q() - 1) / 2);
      if (k.q() == 2) return alexander_torus_two_strand((k.p() - 1) / 2);
      return alexander_torus_by_division(k.p(), k.q());
    case KnotExpr::Kind::Cable2:
      return mul(substitute_power(alexander(k.child()), 2), torus_two_q(k.q()));
    case KnotExpr::Kind::Sum: {
      SymPoly product(Int(1));
      for (const auto& part : k.parts()) product = mul(product, alexander(part));
      return product;
    }
    case KnotExpr::Kind::Mirror:
      return alexander(k.child());
  }
  throw InternalError("unhandled knot kind");
}

namespace {

// Consequences the attribute table always enforces: negative knots bound the
// null-homologous disk and have tau = -g, epsilon = -1 (0 for the unknot);
// tau > 0 rules the disk out.
KnotAttributes settle(KnotAttributes a) {
  if (a.is_negative == true) {
    a.bounds_nullhomologous_disk = true;
    if (a.genus) {
      a.tau = -*a.genus;
      a.epsilon = *a.genus > 0 ? -1 : 0;
    }
  }
  if (a.tau && *a.tau > 0) {
    if (a.bounds_nullhomologous_disk == true) throw InternalError("knot with tau > 0 marked as bounding the disk");
    a.bounds_nullhomologous_disk = false;
  }
  return a;
}

}  // namespace

KnotAttributes attributes(const KnotExpr& k) {
  KnotAttributes a;
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      a.genus = 0;
      a.is_negative = true;
      a.is_positive = true;
      a.epsilon = 0;
      a.tau = 0;
      break;
    case KnotExpr::Kind::Torus: {
      Int g = to_int(k.p() - 1) * to_int(k.q() - 1) / 2;
      a.genus = g;
      a.is_negative = false;
      a.is_positive = true;
      a.epsilon = 1;
      a.tau = g;
      break;
    }
    case KnotExpr::Kind::FamilyK:
      if (k.n() >= 1) {
        a.genus = 1;
        a.is_negative = true;
        a.is_positive = false;
      }
      break;
    case KnotExpr::Kind::Cable2:
      break;
    case KnotExpr::Kind::Sum: {
      bool all_negative = true, all_positive = true, genus_known = true;
      Int genus = 0;
      for (const auto& part : k.parts()) {
        KnotAttributes pa = attributes(part);
        all_negative = all_negative && pa.is_negative == true;
        all_positive = all_positive && pa.is_positive == true;
        if (pa.genus) {
          genus += *pa.genus;
        } else {
          genus_known = false;
        }
      }
      if (genus_known) a.genus = genus;
      if (all_negative) a.is_negative = true;
      if (all_positive) a.is_positive = true;
      break;
    }
    case KnotExpr::Kind::Mirror: {
      KnotAttributes inner = attributes(k.child());
      a.genus = inner.genus;
      a.is_negative = inner.is_positive;
      a.is_positive = inner.is_negative;
      if (inner.tau) a.tau = -*inner.tau;
      if (inner.epsilon) a.epsilon = -*inner.epsilon;
      break;
    }
  }
  return settle(a);
}

}  // namespace knotcalc
