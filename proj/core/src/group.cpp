#include "gnorm/group.hpp"

#include <sstream>

namespace gnorm {

namespace {

uint32_t pow_u32(int64_t p, uint32_t m) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < m; ++i) {
    r *= static_cast<uint64_t>(p);
    if (r > (1u << 30)) fail(errc::invalid_exponent, "factor order too large");
  }
  return static_cast<uint32_t>(r);
}

QuotientRing build_coordinate_ring(const PrimeField& F,
                                   const std::vector<GroupFactor>& fs,
                                   const std::vector<uint32_t>& bounds) {
  std::vector<std::string> names;
  for (size_t i = 0; i < fs.size(); ++i)
    names.push_back("T" + std::to_string(i + 1));
  RingPtr ring = make_ring(F.p(), names);
  std::vector<MultiPoly> rels;
  for (size_t i = 0; i < fs.size(); ++i) {
    MultiPoly t = MultiPoly::variable(ring, i, bounds[i]);
    if (fs[i].kind == FactorKind::mu)
      t = t - MultiPoly::constant(ring, 1);
    rels.push_back(std::move(t));
  }
  return QuotientRing(Ideal(ring, std::move(rels)));
}

}  // namespace

FiniteGroupScheme::FiniteGroupScheme(PrimeField field,
                                     std::vector<GroupFactor> factors)
    : field_(field), factors_(std::move(factors)) {
  order_ = 1;
  for (const auto& f : factors_) {
    if (f.exponent < 1) fail(errc::invalid_exponent, "factor exponent must be >= 1");
    tbounds_.push_back(pow_u32(field_.p(), f.exponent));
    order_ *= tbounds_.back();
    if (order_ > (1u << 30)) fail(errc::invalid_exponent, "group order too large");
  }
  oG_ = build_coordinate_ring(field_, factors_, tbounds_);
  verify_hopf_axioms();
  auto dim = vector_space_dim(oG_);
  if (!dim || *dim != order_)
    fail(errc::validation_error, "coordinate ring dimension mismatch");
}

void FiniteGroupScheme::verify_hopf_axioms() const {
  // Per factor, in F_p[a,b,c] modulo the three copies of the relation.
  for (size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    uint32_t q = tbounds_[i];
    RingPtr ring = make_ring(field_.p(), {"a", "b", "c"});
    auto rel = [&](size_t v) {
      MultiPoly t = MultiPoly::variable(ring, v, q);
      if (f.kind == FactorKind::mu) t = t - MultiPoly::constant(ring, 1);
      return t;
    };
    QuotientRing T3(Ideal(ring, {rel(0), rel(1), rel(2)}));
    MultiPoly a = MultiPoly::variable(ring, 0);
    MultiPoly b = MultiPoly::variable(ring, 1);
    MultiPoly c = MultiPoly::variable(ring, 2);
    auto delta = [&](const MultiPoly& u, const MultiPoly& v) {
      return f.kind == FactorKind::alpha ? u + v : u * v;
    };
    // coassociativity
    MultiPoly lhs = delta(delta(a, b), c);
    MultiPoly rhs = delta(a, delta(b, c));
    if (!T3.nf(lhs - rhs).is_zero())
      fail(errc::validation_error, "coassociativity fails on " + tname(i));
    // counit laws
    MultiPoly eps = f.kind == FactorKind::alpha
                        ? MultiPoly::zero(ring)
                        : MultiPoly::constant(ring, 1);
    if (!T3.nf(delta(eps, a) - a).is_zero() ||
        !T3.nf(delta(a, eps) - a).is_zero())
      fail(errc::validation_error, "counit law fails on " + tname(i));
    // antipode law: m(S otimes id)Delta = eta eps
    MultiPoly s = f.kind == FactorKind::alpha ? -a : a.pow(q - 1);
    MultiPoly anti = f.kind == FactorKind::alpha ? s + a : s * a;
    if (!T3.nf(anti - eps).is_zero())
      fail(errc::validation_error, "antipode law fails on " + tname(i));
  }
}

std::string FiniteGroupScheme::descriptor() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << (factors_[i].kind == FactorKind::alpha ? "alpha" : "mu") << "("
       << factors_[i].exponent << ")";
  }
  return os.str();
}

FiniteGroupScheme make_group(int64_t p, const std::vector<GroupFactor>& fs) {
  return FiniteGroupScheme(PrimeField(p), fs);
}

FiniteGroupScheme parse_group(const std::string& text, int64_t expected_p) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto err = [&](const std::string& m) {
    fail(errc::parse_error, "group descriptor: " + m + " in \"" + text + "\"");
  };
  skip();
  if (text.compare(i, 2, "p=") == 0) {
    i += 2;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i) err("expected prime after p=");
    int64_t p = std::stoll(text.substr(start, i - start));
    if (p != expected_p) err("descriptor prime differs from the problem prime");
    skip();
    if (i < text.size() && text[i] == ';') ++i;
    skip();
    if (text.compare(i, 1, "G") == 0) {
      ++i;
      skip();
      if (i < text.size() && text[i] == '=') ++i;
    }
  }
  skip();
  if (text.compare(i, 1, "1") == 0 && i + 1 >= text.size())
    return make_group(expected_p, {});
  std::vector<GroupFactor> fs;
  for (;;) {
    skip();
    FactorKind kind;
    if (text.compare(i, 5, "alpha") == 0) {
      kind = FactorKind::alpha;
      i += 5;
    } else if (text.compare(i, 2, "mu") == 0) {
      kind = FactorKind::mu;
      i += 2;
    } else {
      err("expected alpha(..) or mu(..)");
    }
    skip();
    if (i >= text.size() || text[i] != '(') err("expected '('");
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i) err("expected exponent");
    uint32_t m = static_cast<uint32_t>(std::stoul(text.substr(start, i - start)));
    if (i >= text.size() || text[i] != ')') err("expected ')'");
    ++i;
    fs.push_back(GroupFactor{kind, m});
    skip();
    if (i >= text.size()) break;
    if (text[i] == 'x' || text[i] == 'X') {
      ++i;
      continue;
    }
    err("expected 'x' between factors");
  }
  return make_group(expected_p, fs);
}

}  // namespace gnorm
