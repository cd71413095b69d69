#include "gnorm/derivation.hpp"

#include "gnorm/linalg.hpp"

namespace gnorm {

Derivation::Derivation(QuotientRing R, std::vector<MultiPoly> images)
    : base_(std::move(R)) {
  size_t n = base_.ambient()->nvars();
  if (images.size() != n)
    fail(errc::validation_error, "derivation needs one image per variable");
  for (auto& g : images) images_.push_back(base_.nf(g));
  for (const auto& rel : base_.defining().gens()) {
    MultiPoly acc(base_.ambient());
    for (size_t j = 0; j < n; ++j)
      acc = acc + rel.derivative(j) * images_[j];
    if (!base_.nf(acc).is_zero())
      fail(errc::validation_error,
           "derivation does not descend: fails on " + rel.str());
  }
}

MultiPoly Derivation::apply(const MultiPoly& f) const {
  MultiPoly acc(base_.ambient());
  MultiPoly g = f.ring() == base_.ambient() ? f : f.lift_to(base_.ambient());
  for (size_t j = 0; j < images_.size(); ++j)
    acc = acc + g.derivative(j) * images_[j];
  return base_.nf(acc);
}

bool Derivation::is_zero() const {
  for (const auto& g : images_)
    if (!g.is_zero()) return false;
  return true;
}

bool Derivation::equals(const Derivation& o) const {
  if (!base_.same(o.base_)) return false;
  for (size_t j = 0; j < images_.size(); ++j)
    if (base_.nf(images_[j] - o.images_[j]) != MultiPoly::zero(base_.ambient()))
      if (!base_.nf(images_[j] - o.images_[j]).is_zero()) return false;
  return true;
}

Derivation derivation_p_power(const Derivation& D) {
  int64_t p = D.base().ambient()->field().p();
  std::vector<MultiPoly> images;
  for (size_t j = 0; j < D.images().size(); ++j) {
    MultiPoly g = MultiPoly::variable(D.base().ambient(), j);
    for (int64_t i = 0; i < p; ++i) g = D.apply(g);
    images.push_back(g);
  }
  return Derivation(D.base(), std::move(images));
}

Coaction coaction_from_derivation(const Derivation& D) {
  const QuotientRing& R = D.base();
  int64_t p = R.ambient()->field().p();
  PrimeField F(p);
  Derivation Dp = derivation_p_power(D);

  bool nil = Dp.is_zero();
  bool semisimple = !nil && Dp.equals(D);
  if (!nil && !semisimple) {
    std::string desc;
    for (size_t j = 0; j < Dp.images().size(); ++j) {
      if (j) desc += ", ";
      desc += R.ambient()->var_name(j) + " -> " + Dp.images()[j].str();
    }
    fail(errc::not_restricted, "D^p is neither 0 nor D; D^p: " + desc);
  }

  FiniteGroupScheme G =
      make_group(p, {GroupFactor{nil ? FactorKind::alpha : FactorKind::mu, 1}});
  TensorCtx ctx(G, R, 1);
  size_t n = R.ambient()->nvars();
  std::vector<MultiPoly> images;
  if (nil) {
    // exp(T D) with divided powers
    for (size_t j = 0; j < n; ++j) {
      MultiPoly img(ctx.ring());
      MultiPoly pw = MultiPoly::variable(R.ambient(), j);
      int64_t inv_fact = 1;
      for (int64_t i = 0; i < p; ++i) {
        if (i > 0) {
          pw = D.apply(pw);
          inv_fact = F.mul(inv_fact, F.inv(i));
        }
        if (pw.is_zero()) break;
        img = img + ctx.tvar_poly(0, 0, static_cast<uint32_t>(i)) *
                        ctx.embed_r(pw.scaled(inv_fact));
      }
      images.push_back(ctx.canon(img));
    }
  } else {
    // eigen decomposition via Lagrange projectors
    for (size_t j = 0; j < n; ++j) {
      MultiPoly x = MultiPoly::variable(R.ambient(), j);
      MultiPoly img(ctx.ring());
      MultiPoly check(R.ambient());
      for (int64_t gamma = 0; gamma < p; ++gamma) {
        MultiPoly proj = R.nf(x);
        int64_t denom = 1;
        for (int64_t c = 0; c < p; ++c) {
          if (c == gamma) continue;
          proj = R.nf(D.apply(proj) - proj.scaled(c));
          denom = F.mul(denom, F.sub(gamma, c));
        }
        proj = proj.scaled(F.inv(denom));
        if (proj.is_zero()) continue;
        if (!R.nf(D.apply(proj) - proj.scaled(gamma)).is_zero())
          fail(errc::validation_error, "eigen decomposition failed");
        check = check + proj;
        img = img + ctx.tvar_poly(0, 0, static_cast<uint32_t>(gamma)) *
                        ctx.embed_r(proj);
      }
      if (!R.nf(check - x).is_zero())
        fail(errc::validation_error, "eigen components do not sum back");
      images.push_back(ctx.canon(img));
    }
  }
  return make_coaction(G, R, images);
}

Derivation derivation_of(const Coaction& a, size_t factor) {
  const auto& ctx = *a.ctx();
  const RingPtr& amb = a.base().ambient();
  std::vector<MultiPoly> images;
  Monomial pick(ctx.nt(), 0);
  pick[ctx.tvar(0, factor)] = 1;
  for (size_t j = 0; j < amb->nvars(); ++j) {
    auto coefs = ctx.augmentation_coefficients(a.images()[j]);
    auto it = coefs.find(pick);
    images.push_back(it == coefs.end() ? MultiPoly::zero(amb) : it->second);
  }
  return Derivation(a.base(), std::move(images));
}

Coaction mu_standard_action(int64_t p, size_t n) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> vars;
  for (size_t i = 0; i < n; ++i)
    vars.push_back(n <= 4 ? short_names[i] : "x" + std::to_string(i + 1));
  RingPtr ring = make_ring(p, vars);
  QuotientRing R(ring);
  std::vector<GroupFactor> fs(n, GroupFactor{FactorKind::mu, 1});
  FiniteGroupScheme G = make_group(p, fs);
  TensorCtx ctx(G, R, 1);
  std::vector<MultiPoly> images;
  for (size_t i = 0; i < n; ++i)
    images.push_back(ctx.tvar_poly(0, i) *
                     MultiPoly::variable(ctx.ring(), ctx.rvar(i)));
  return make_coaction(G, R, images);
}

Coaction alpha_family_action(const RingPtr& ring,
                             const std::vector<MultiPoly>& fs) {
  int64_t p = ring->field().p();
  PrimeField F(p);
  size_t m = fs.size();
  if (m == 0) fail(errc::validation_error, "alpha family needs coefficients");
  // every exponent divisible by p
  for (const auto& f : fs)
    for (const auto& [mono, c] : f.terms())
      for (uint32_t e : mono)
        if (e % p != 0)
          fail(errc::not_in_pth_powers,
               f.str() + " is not a polynomial in p-th powers");
  // linear independence over F_p
  {
    std::vector<Monomial> monos;
    for (const auto& f : fs)
      for (const auto& [mono, c] : f.terms())
        if (std::find(monos.begin(), monos.end(), mono) == monos.end())
          monos.push_back(mono);
    FpK k(p);
    Mat<FpK> mat(k, m, monos.size());
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < monos.size(); ++j)
        mat.at(i, j) = fs[i].coeff(monos[j]);
    if (rref(k, mat).size() < m)
      fail(errc::dependent_coefficients,
           "family coefficients are linearly dependent over F_p");
  }

  QuotientRing R(ring);
  std::vector<GroupFactor> gf(m, GroupFactor{FactorKind::alpha, 1});
  FiniteGroupScheme G = make_group(p, gf);
  TensorCtx ctx(G, R, 1);
  std::vector<Derivation> ds;
  for (const auto& f : fs) {
    std::vector<MultiPoly> im(ring->nvars(), MultiPoly::zero(ring));
    im[0] = f;
    ds.emplace_back(R, im);
  }
  std::vector<MultiPoly> images;
  for (size_t j = 0; j < ring->nvars(); ++j) {
    MultiPoly img = ctx.embed_r(MultiPoly::variable(ring, j));
    for (size_t kf = 0; kf < m; ++kf) {
      // apply exp(T_kf D_kf) to every coefficient
      MultiPoly next(ctx.ring());
      for (auto& [tm, coef] : ctx.t_coefficients(img)) {
        MultiPoly pw = coef;
        int64_t inv_fact = 1;
        for (int64_t i = 0; i < p; ++i) {
          if (i > 0) {
            pw = ds[kf].apply(pw);
            inv_fact = F.mul(inv_fact, F.inv(i));
          }
          if (pw.is_zero()) break;
          Monomial shift(ctx.ring()->nvars(), 0);
          for (size_t t = 0; t < ctx.nt(); ++t) shift[t] = tm[t];
          shift[ctx.tvar(0, kf)] += static_cast<uint32_t>(i);
          next = next +
                 ctx.embed_r(pw.scaled(inv_fact)).mul_monomial(shift, 1);
        }
      }
      img = ctx.canon(next);
    }
    images.push_back(img);
  }
  return make_coaction(G, R, images);
}

}  // namespace gnorm
