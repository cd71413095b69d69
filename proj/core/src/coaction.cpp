#include "gnorm/coaction.hpp"

namespace gnorm {

Coaction::Coaction(FiniteGroupScheme G, QuotientRing R,
                   std::vector<MultiPoly> images, TensorPtr ctx)
    : group_(std::move(G)),
      base_(std::move(R)),
      images_(std::move(images)),
      ctx_(std::move(ctx)) {}

MultiPoly Coaction::apply(const MultiPoly& f) const {
  return apply_tensor(f.lift_to(ctx_->ring()));
}

MultiPoly Coaction::apply_tensor(const MultiPoly& g) const {
  const RingPtr& ring = ctx_->ring();
  std::vector<MultiPoly> sub;
  for (size_t v = 0; v < ring->nvars(); ++v)
    sub.push_back(MultiPoly::variable(ring, v));
  for (size_t j = 0; j < base_.ambient()->nvars(); ++j)
    sub[ctx_->rvar(j)] = images_[j];
  return ctx_->canon(g.substitute(sub, ring));
}

bool Coaction::is_trivial_action() const {
  for (size_t j = 0; j < images_.size(); ++j) {
    MultiPoly x = MultiPoly::variable(base_.ambient(), j);
    if (images_[j] != ctx_->embed_r(x)) return false;
  }
  return true;
}

Coaction make_coaction(const FiniteGroupScheme& G, const QuotientRing& R,
                       const std::vector<MultiPoly>& raw_images) {
  TensorPtr ctx = make_tensor(G, R, 1);
  const RingPtr& ring = ctx->ring();
  size_t n = R.ambient()->nvars();
  if (raw_images.size() != n)
    fail(errc::validation_error, "coaction needs one image per ring variable");

  std::vector<MultiPoly> images;
  for (size_t j = 0; j < n; ++j) {
    MultiPoly raw = raw_images[j].ring() == ring
                        ? raw_images[j]
                        : raw_images[j].lift_to(ring);
    if (!ctx->t_degrees_legal(raw))
      fail(errc::illegal_t_degree,
           "image of " + R.ambient()->var_name(j) +
               " carries a T-exponent at or above its relation bound");
    images.push_back(ctx->canon(raw));
  }

  // (b) coassociativity, in the two-copy context
  TensorCtx ctx2(G, R, 2);
  const RingPtr& ring2 = ctx2.ring();
  size_t r = G.nfactors();
  // lhs map: T_i -> Delta(T_i), x_j -> x_j
  std::vector<MultiPoly> lhs_sub;
  // rhs map: T_i -> T_i (copy 0), x_j -> image with T moved to copy 1
  std::vector<MultiPoly> rhs_sub;
  for (size_t i = 0; i < r; ++i) {
    MultiPoly t0 = MultiPoly::variable(ring2, ctx2.tvar(0, i));
    MultiPoly t1 = MultiPoly::variable(ring2, ctx2.tvar(1, i));
    lhs_sub.push_back(G.factors()[i].kind == FactorKind::alpha ? t0 + t1
                                                               : t0 * t1);
    rhs_sub.push_back(t0);
  }
  std::vector<MultiPoly> shift1;  // ctx1 ring -> ctx2 ring with T in copy 1
  for (size_t i = 0; i < r; ++i)
    shift1.push_back(MultiPoly::variable(ring2, ctx2.tvar(1, i)));
  for (size_t j = 0; j < n; ++j)
    shift1.push_back(MultiPoly::variable(ring2, ctx2.rvar(j)));
  for (size_t j = 0; j < n; ++j)
    rhs_sub.push_back(images[j].substitute(shift1, ring2));
  for (size_t j = 0; j < n; ++j)
    lhs_sub.push_back(MultiPoly::variable(ring2, ctx2.rvar(j)));
  for (size_t j = 0; j < n; ++j) {
    MultiPoly lhs = ctx2.canon(images[j].substitute(lhs_sub, ring2));
    MultiPoly rhs = ctx2.canon(images[j].substitute(rhs_sub, ring2));
    if (lhs != rhs)
      fail(errc::coassociativity_violation,
           "coassociativity fails on variable " + R.ambient()->var_name(j));
  }

  // (a) counit law
  for (size_t j = 0; j < n; ++j) {
    MultiPoly x = MultiPoly::variable(R.ambient(), j);
    if (ctx->counit(images[j]) != R.nf(x))
      fail(errc::counit_violation,
           "counit axiom fails on variable " + R.ambient()->var_name(j));
  }

  // (c) well-definedness on R
  for (const auto& rel : R.defining().gens()) {
    if (rel.is_zero()) continue;
    std::vector<MultiPoly> sub;
    for (size_t j = 0; j < n; ++j) sub.push_back(images[j]);
    MultiPoly img = ctx->canon(rel.substitute(sub, ring));
    if (!img.is_zero())
      fail(errc::relation_not_preserved,
           "relation " + rel.str() + " is not preserved");
  }

  Coaction a(G, R, images, ctx);

  // antipode spot check: multiplying the inverse against the action gives
  // the trivial coaction (redundant given the axioms; validates plumbing)
  for (size_t j = 0; j < n; ++j) {
    // (id (x) a*)(a*(x_j)) with S on copy 0, then both copies multiplied
    MultiPoly rhs = images[j].substitute(rhs_sub, ring2);
    std::vector<MultiPoly> collapse;
    for (size_t i = 0; i < r; ++i) {
      MultiPoly t = MultiPoly::variable(ring, ctx->tvar(0, i));
      collapse.push_back(G.factors()[i].kind == FactorKind::alpha
                             ? -t
                             : MultiPoly::variable(ring, ctx->tvar(0, i),
                                                   G.tbound(i) - 1));
    }
    for (size_t i = 0; i < r; ++i)
      collapse.push_back(MultiPoly::variable(ring, ctx->tvar(0, i)));
    for (size_t j2 = 0; j2 < n; ++j2)
      collapse.push_back(MultiPoly::variable(ring, ctx->rvar(j2)));
    MultiPoly folded = ctx->canon(rhs.substitute(collapse, ring));
    MultiPoly expect = ctx->embed_r(MultiPoly::variable(R.ambient(), j));
    if (folded != expect)
      fail(errc::validation_error,
           "antipode consistency fails on variable " +
               R.ambient()->var_name(j));
  }
  return a;
}

Ideal fixed_subscheme(const Coaction& a) {
  const auto& ctx = *a.ctx();
  const RingPtr& amb = a.base().ambient();
  std::vector<MultiPoly> gens;
  for (size_t j = 0; j < amb->nvars(); ++j) {
    MultiPoly x = MultiPoly::variable(amb, j);
    MultiPoly d = ctx.canon(a.images()[j] - ctx.embed_r(x));
    for (auto& [tm, coef] : ctx.augmentation_coefficients(d)) {
      if (total_degree(tm) == 0) {
        if (!a.base().nf(coef).is_zero())
          fail(errc::validation_error, "augmentation constant term survives");
        continue;
      }
      MultiPoly nf = a.base().nf(coef);
      if (!nf.is_zero()) gens.push_back(nf);
    }
  }
  return Ideal(amb, std::move(gens));
}

StabilizerInfo stabilizer_at(const Coaction& a, const PointData& x) {
  const FiniteGroupScheme& G = a.group();
  QuotientRing kappa(x.m);
  TensorCtx ctxm(G, kappa, 1);
  std::vector<MultiPoly> gens;
  for (const auto& r : x.m.gens()) {
    MultiPoly d = a.apply(r) - a.ctx()->embed_r(r);
    MultiPoly e = ctxm.canon(d.lift_to(ctxm.ring()));
    if (!e.is_zero()) gens.push_back(e);
  }
  Ideal stab(ctxm.ring(), gens);

  std::vector<MultiPoly> full = gens;
  for (const auto& rel : G.coordinate_ring().defining().gens())
    full.push_back(rel.lift_to(ctxm.ring()));
  for (const auto& g : x.m.gens()) full.push_back(g.lift_to(ctxm.ring()));
  auto dim = vector_space_dim(QuotientRing(Ideal(ctxm.ring(), full)));
  if (!dim || *dim % x.degree != 0)
    fail(errc::validation_error, "stabilizer dimension inconsistency");
  return StabilizerInfo{stab, *dim / x.degree};
}

Ideal non_free_locus(const Coaction& a) {
  const auto& ctx = *a.ctx();
  const RingPtr& amb = a.base().ambient();
  auto basis = t_monomials(ctx);
  size_t D = basis.size();
  std::map<Monomial, size_t> row_of;
  for (size_t i = 0; i < D; ++i) row_of[basis[i]] = i;

  std::vector<std::vector<MultiPoly>> M(D);
  for (size_t j = 0; j < amb->nvars(); ++j) {
    MultiPoly x = MultiPoly::variable(amb, j);
    MultiPoly d = ctx.canon(a.images()[j] - ctx.embed_r(x));
    if (d.is_zero()) continue;
    for (const auto& beta : basis) {
      Monomial full(ctx.ring()->nvars(), 0);
      for (size_t i = 0; i < ctx.nt(); ++i) full[i] = beta[i];
      MultiPoly elt = ctx.canon(d.mul_monomial(full, 1));
      std::vector<MultiPoly> col(D, MultiPoly::zero(amb));
      for (auto& [tm, coef] : ctx.t_coefficients(elt))
        col[row_of.at(tm)] = coef;
      for (size_t rr = 0; rr < D; ++rr) M[rr].push_back(col[rr]);
    }
  }
  Ideal fit = fitting_ideal(M, 1, amb);
  std::vector<MultiPoly> gens;
  for (const auto& g : fit.gens()) {
    MultiPoly nf = a.base().nf(g);
    if (!nf.is_zero()) gens.push_back(nf);
  }
  return Ideal(amb, std::move(gens));
}

MultiPoly norm_invariant(const Coaction& a, const MultiPoly& r) {
  const auto& ctx = *a.ctx();
  const RingPtr& amb = a.base().ambient();
  if (a.group().order() > (1u << 14))
    fail(errc::limit_exceeded, "norm determinant too large");
  auto basis = t_monomials(ctx);
  size_t D = basis.size();
  std::map<Monomial, size_t> row_of;
  for (size_t i = 0; i < D; ++i) row_of[basis[i]] = i;
  MultiPoly ar = a.apply(r);

  std::vector<std::vector<MultiPoly>> M(D, std::vector<MultiPoly>());
  for (const auto& beta : basis) {
    Monomial full(ctx.ring()->nvars(), 0);
    for (size_t i = 0; i < ctx.nt(); ++i) full[i] = beta[i];
    MultiPoly elt = ctx.canon(ar.mul_monomial(full, 1));
    std::vector<MultiPoly> col(D, MultiPoly::zero(amb));
    for (auto& [tm, coef] : ctx.t_coefficients(elt))
      col[row_of.at(tm)] = coef;
    for (size_t rr = 0; rr < D; ++rr) M[rr].push_back(col[rr]);
  }
  MultiPoly det = a.base().nf(square_det(M, amb));
  // the norm lands in the invariant subring
  if (!is_invariant(a, det))
    fail(errc::validation_error, "norm failed its invariance check");
  return det;
}

bool is_invariant(const Coaction& a, const MultiPoly& f) {
  return a.apply(f) == a.ctx()->embed_r(f);
}

}  // namespace gnorm
