#include "gnorm/tensor.hpp"

#include <algorithm>

namespace gnorm {

TensorCtx::TensorCtx(FiniteGroupScheme group, QuotientRing base, size_t copies)
    : group_(std::move(group)), base_(std::move(base)), copies_(copies) {
  std::vector<std::string> names;
  for (size_t c = 0; c < copies_; ++c)
    for (size_t i = 0; i < group_.nfactors(); ++i) {
      std::string n = group_.tname(i);
      for (size_t rep = 1; rep < c + 1; ++rep) n += "'";
      names.push_back(n);
    }
  for (const auto& v : base_.ambient()->vars()) {
    if (std::find(names.begin(), names.end(), v) != names.end())
      fail(errc::validation_error,
           "ring variable " + v + " collides with a group coordinate");
    names.push_back(v);
  }
  ring_ = make_ring(group_.field().p(), names);
}

MultiPoly TensorCtx::canon(const MultiPoly& f) const {
  // reduce T-exponents by the relations, then reduce coefficients mod J
  MultiPoly reduced(ring_);
  size_t r = group_.nfactors();
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    bool dead = false;
    for (size_t cp = 0; cp < copies_ && !dead; ++cp)
      for (size_t i = 0; i < r; ++i) {
        size_t v = tvar(cp, i);
        uint32_t q = group_.tbound(i);
        if (mm[v] >= q) {
          if (group_.factors()[i].kind == FactorKind::alpha) {
            dead = true;
            break;
          }
          mm[v] %= q;
        }
      }
    if (!dead) reduced.add_term(mm, c);
  }
  if (base_.defining().is_zero() || reduced.is_zero()) return reduced;
  // coefficient-wise normal form mod J
  MultiPoly out(ring_);
  for (auto& [tm, coef] : t_coefficients(reduced)) {
    MultiPoly nf = base_.nf(coef);
    if (nf.is_zero()) continue;
    MultiPoly lifted = nf.lift_to(ring_);
    for (const auto& [m, c] : lifted.terms()) {
      Monomial mm = m;
      for (size_t v = 0; v < nt(); ++v) mm[v] = tm[v];
      out.add_term(mm, c);
    }
  }
  return out;
}

MultiPoly TensorCtx::embed_r(const MultiPoly& f) const {
  return canon(f.lift_to(ring_));
}

MultiPoly TensorCtx::tvar_poly(size_t copy, size_t factor, uint32_t e) const {
  return MultiPoly::variable(ring_, tvar(copy, factor), e);
}

bool TensorCtx::t_degrees_legal(const MultiPoly& f) const {
  for (const auto& [m, c] : f.terms())
    for (size_t cp = 0; cp < copies_; ++cp)
      for (size_t i = 0; i < group_.nfactors(); ++i)
        if (m[tvar(cp, i)] >= group_.tbound(i)) return false;
  return true;
}

std::map<Monomial, MultiPoly> TensorCtx::t_coefficients(
    const MultiPoly& f) const {
  std::map<Monomial, MultiPoly> out;
  const RingPtr& amb = base_.ambient();
  size_t ntv = nt();
  for (const auto& [m, c] : f.terms()) {
    Monomial tm(ntv, 0);
    for (size_t v = 0; v < ntv; ++v) tm[v] = m[v];
    Monomial rm(amb->nvars(), 0);
    for (size_t j = 0; j < amb->nvars(); ++j) rm[j] = m[rvar(j)];
    auto it = out.find(tm);
    if (it == out.end())
      it = out.emplace(tm, MultiPoly::zero(amb)).first;
    it->second.add_term(rm, c);
  }
  // drop coefficients that became zero
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<Monomial, MultiPoly> TensorCtx::augmentation_coefficients(
    const MultiPoly& f) const {
  // substitute T = U + 1 on mu coordinates (alpha coordinates untouched)
  std::vector<MultiPoly> images;
  for (size_t v = 0; v < ring_->nvars(); ++v)
    images.push_back(MultiPoly::variable(ring_, v));
  for (size_t cp = 0; cp < copies_; ++cp)
    for (size_t i = 0; i < group_.nfactors(); ++i)
      if (group_.factors()[i].kind == FactorKind::mu)
        images[tvar(cp, i)] = MultiPoly::variable(ring_, tvar(cp, i)) +
                              MultiPoly::constant(ring_, 1);
  MultiPoly shifted = f.substitute(images, ring_);
  return t_coefficients(shifted);
}

MultiPoly TensorCtx::counit(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  for (size_t cp = 0; cp < copies_; ++cp)
    for (size_t i = 0; i < group_.nfactors(); ++i)
      images.push_back(group_.factors()[i].kind == FactorKind::alpha
                           ? MultiPoly::zero(base_.ambient())
                           : MultiPoly::constant(base_.ambient(), 1));
  for (size_t j = 0; j < base_.ambient()->nvars(); ++j)
    images.push_back(MultiPoly::variable(base_.ambient(), j));
  return base_.nf(f.substitute(images, base_.ambient()));
}

MultiPoly TensorCtx::antipode(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  for (size_t v = 0; v < ring_->nvars(); ++v)
    images.push_back(MultiPoly::variable(ring_, v));
  for (size_t i = 0; i < group_.nfactors(); ++i) {
    size_t v = tvar(0, i);
    images[v] = group_.factors()[i].kind == FactorKind::alpha
                    ? -MultiPoly::variable(ring_, v)
                    : MultiPoly::variable(ring_, v, group_.tbound(i) - 1);
  }
  return canon(f.substitute(images, ring_));
}

TensorPtr make_tensor(const FiniteGroupScheme& G, const QuotientRing& R,
                      size_t copies) {
  return std::make_shared<TensorCtx>(G, R, copies);
}

std::vector<Monomial> t_monomials(const TensorCtx& ctx) {
  size_t r = ctx.group().nfactors();
  std::vector<Monomial> out;
  Monomial m(r, 0);
  for (;;) {
    out.push_back(m);
    size_t i = 0;
    while (i < r) {
      if (++m[i] < ctx.group().tbound(i)) break;
      m[i] = 0;
      ++i;
    }
    if (i == r) break;
    if (r == 0) break;
  }
  MonomialOrder ord = MonomialOrder::Degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

}  // namespace gnorm
