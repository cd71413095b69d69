#include "gnorm/funfield.hpp"

#include <sstream>

#include "gnorm/linalg.hpp"

namespace gnorm {

RatK::El RatK::normalize(UPp n, UPp d) const {
  if (d.is_zero()) fail(errc::validation_error, "zero denominator");
  if (n.is_zero()) return zero();
  UPp g = up_gcd(base, n, d);
  if (g.deg() > 0) {
    UPp q, r;
    up_divmod(base, n, g, q, r);
    n = q;
    up_divmod(base, d, g, q, r);
    d = q;
  }
  int64_t lc = d.c.back();
  if (lc != 1) {
    int64_t inv = base.F.inv(lc);
    n = up_scale(base, n, inv);
    d = up_scale(base, d, inv);
  }
  return {std::move(n), std::move(d)};
}

bool RatK::eq(const El& a, const El& b) const {
  return a.num.c == b.num.c && a.den.c == b.den.c;
}

RatK::El RatK::add(const El& a, const El& b) const {
  return normalize(up_add(base, up_mul(base, a.num, b.den),
                          up_mul(base, b.num, a.den)),
                   up_mul(base, a.den, b.den));
}

RatK::El RatK::sub(const El& a, const El& b) const {
  return normalize(up_sub(base, up_mul(base, a.num, b.den),
                          up_mul(base, b.num, a.den)),
                   up_mul(base, a.den, b.den));
}

RatK::El RatK::mul(const El& a, const El& b) const {
  return normalize(up_mul(base, a.num, b.num), up_mul(base, a.den, b.den));
}

RatK::El RatK::div(const El& a, const El& b) const {
  if (is_zero(b)) fail(errc::validation_error, "rational division by zero");
  return normalize(up_mul(base, a.num, b.den), up_mul(base, a.den, b.num));
}

RatK::El RatK::neg(const El& a) const {
  return {up_scale(base, a.num, base.F.neg(1)), a.den};
}

RatK::El RatK::inv(const El& a) const {
  if (is_zero(a)) fail(errc::validation_error, "rational inverse of zero");
  return normalize(a.den, a.num);
}

bool RatK::pth_root(const El& a, El& out) const {
  int64_t p = base.F.p();
  auto root_poly = [&](const UPp& f, UPp& r) {
    r = UPp::zero();
    for (size_t i = 0; i < f.c.size(); ++i) {
      if (f.c[i] == 0) continue;
      if (i % p != 0) return false;
      if (r.c.size() < i / p + 1) r.c.resize(i / p + 1, 0);
      r.c[i / p] = f.c[i];  // coefficients are Frobenius-fixed in F_p
    }
    r.trim(base);
    return true;
  };
  if (is_zero(a)) {
    out = zero();
    return true;
  }
  // a = num/den reduced: a is a p-th power iff num*den^{p-1}/den^p works out,
  // i.e. iff num and den are both p-th powers (unique factorization).
  UPp rn, rd;
  if (!root_poly(a.num, rn) || !root_poly(a.den, rd)) return false;
  out = normalize(std::move(rn), std::move(rd));
  return true;
}

std::string RatK::str(const El& a, const std::string& var) const {
  auto poly_str = [&](const UPp& f) {
    if (f.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.c.size(); i-- > 0;) {
      if (f.c[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || f.c[i] != 1) os << f.c[i];
      if (i > 0) {
        if (f.c[i] != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  };
  if (a.den.deg() == 0) return poly_str(a.num);
  return "(" + poly_str(a.num) + ")/(" + poly_str(a.den) + ")";
}

namespace {

// orientation: choose t with nonzero partial so t is separable over F_p(s)
std::pair<size_t, size_t> choose_orientation(const MultiPoly& f) {
  const RingPtr& ring = f.ring();
  if (ring->nvars() != 2)
    fail(errc::validation_error, "function field needs a plane model");
  MultiPoly d1 = f.derivative(1);
  if (f.degree_in(1) >= 1 && !d1.is_zero()) return {0, 1};  // s=var0, t=var1
  MultiPoly d0 = f.derivative(0);
  if (f.degree_in(0) >= 1 && !d0.is_zero()) return {1, 0};
  fail(errc::validation_error,
       "curve polynomial is inseparable in both variables");
}

}  // namespace

FunctionField::FunctionField(const MultiPoly& curve_poly)
    : rk_(curve_poly.ring()->field().p()) {
  auto [si, ti] = choose_orientation(curve_poly);
  svar_ = curve_poly.ring()->var_name(si);
  tvar_ = curve_poly.ring()->var_name(ti);
  // minpoly: f as polynomial in t with F_p(s) coefficients
  uint32_t dt = curve_poly.degree_in(ti);
  std::vector<RatK::El> cs(dt + 1, rk_.zero());
  for (const auto& [m, c] : curve_poly.terms()) {
    UPp mono;
    mono.c.assign(m[si] + 1, 0);
    mono.c[m[si]] = c;
    cs[m[ti]] = rk_.add(cs[m[ti]], rk_.from_poly(mono));
  }
  minpoly_ = UP<RatK>::make(rk_, std::move(cs));
  if (minpoly_.deg() < 1)
    fail(errc::validation_error, "degenerate curve polynomial");
}

bool FunctionField::eq(const El& a, const El& b) const {
  return up_sub(rk_, a, b).is_zero();
}

FunctionField::El FunctionField::inv(const El& a) const {
  if (a.is_zero()) fail(errc::validation_error, "field inverse of zero");
  // extended Euclid in F_p(s)[t] against the minimal polynomial
  El r0 = minpoly_, r1 = a;
  El t0 = zero(), t1 = one();
  while (!r1.is_zero()) {
    El q, r2;
    up_divmod(rk_, r0, r1, q, r2);
    El t2 = up_sub(rk_, t0, up_mul(rk_, q, t1));
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.deg() != 0)
    fail(errc::validation_error, "element is a zero divisor (reducible model)");
  auto c = rk_.inv(r0.c[0]);
  return up_mod(rk_, up_scale(rk_, t0, c), minpoly_);
}

FunctionField::El FunctionField::pow(const El& a, uint64_t e) const {
  El acc = one(), base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FunctionField::El FunctionField::from_poly(const MultiPoly& g) const {
  const RingPtr& ring = g.ring();
  size_t si = ring->var_index(svar_);
  size_t ti = ring->var_index(tvar_);
  El acc = zero();
  for (const auto& [m, c] : g.terms()) {
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0 && v != si && v != ti)
        fail(errc::validation_error,
             "polynomial uses a variable outside the plane model: " +
                 ring->var_name(v));
    UPp spart;
    uint32_t se = si == PolyRing::npos ? 0 : m[si];
    spart.c.assign(se + 1, 0);
    spart.c[se] = c;
    El term = El::constant(rk_, rk_.from_poly(spart));
    if (ti != PolyRing::npos && m[ti] > 0)
      term = mul(term, pow(ident_t(), m[ti]));
    acc = add(acc, term);
  }
  return up_mod(rk_, acc, minpoly_);
}

FunctionField::El FunctionField::from_fraction(const MultiPoly& num,
                                               const MultiPoly& den) const {
  return div(from_poly(num), from_poly(den));
}

bool FunctionField::pth_root(const El& w, El& out) const {
  int64_t p = this->p();
  size_t d = static_cast<size_t>(minpoly_.deg());
  // solve sum_j V_j t^{jp} = w with V_j in F_p(s)^p
  std::vector<El> powers;
  for (size_t j = 0; j < d; ++j)
    powers.push_back(pow(ident_t(), static_cast<uint64_t>(j) * p));
  Mat<RatK> m(rk_, d, d);
  for (size_t j = 0; j < d; ++j) {
    const El& pj = powers[j];
    for (size_t i = 0; i < d; ++i)
      if (i < pj.c.size()) m.at(i, j) = pj.c[i];
  }
  std::vector<RatK::El> rhs(d, rk_.zero());
  for (size_t i = 0; i < d && i < w.c.size(); ++i) rhs[i] = w.c[i];
  std::vector<RatK::El> V;
  if (!solve_linear(rk_, m, rhs, V))
    fail(errc::validation_error, "p-th power basis is degenerate");
  std::vector<RatK::El> roots(d, rk_.zero());
  for (size_t j = 0; j < d; ++j)
    if (!rk_.pth_root(V[j], roots[j])) return false;
  out = El::make(rk_, std::move(roots));
  // verify exactly
  if (!eq(pow(out, static_cast<uint64_t>(p)), w))
    fail(errc::validation_error, "p-th root verification failed");
  return true;
}

bool FunctionField::proot(const El& w, uint32_t m, El& out) const {
  El cur = w;
  for (uint32_t i = 0; i < m; ++i) {
    El next;
    if (!pth_root(cur, next)) return false;
    cur = next;
  }
  out = cur;
  return true;
}

std::string FunctionField::str(const El& w) const {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = w.c.size(); i-- > 0;) {
    if (rk_.is_zero(w.c[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << rk_.str(w.c[i], svar_);
    if (i > 0) {
      os << "*" << tvar_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

KTensor KTensorCtx::embed(const FunctionField::El& w) const {
  KTensor r;
  if (!K_->is_zero(w)) r.c[Monomial(G_->nfactors(), 0)] = w;
  return r;
}

Monomial KTensorCtx::reduce_t(Monomial m, bool& dead) const {
  dead = false;
  for (size_t i = 0; i < G_->nfactors(); ++i) {
    uint32_t q = G_->tbound(i);
    if (m[i] >= q) {
      if (G_->factors()[i].kind == FactorKind::alpha) {
        dead = true;
        return m;
      }
      m[i] %= q;
    }
  }
  return m;
}

KTensor KTensorCtx::add(const KTensor& a, const KTensor& b) const {
  KTensor r = a;
  for (const auto& [m, w] : b.c) {
    auto it = r.c.find(m);
    if (it == r.c.end()) {
      r.c[m] = w;
    } else {
      it->second = K_->add(it->second, w);
      if (K_->is_zero(it->second)) r.c.erase(it);
    }
  }
  return r;
}

KTensor KTensorCtx::sub(const KTensor& a, const KTensor& b) const {
  KTensor nb;
  for (const auto& [m, w] : b.c) nb.c[m] = K_->neg(w);
  return add(a, nb);
}

KTensor KTensorCtx::mul(const KTensor& a, const KTensor& b) const {
  KTensor r;
  for (const auto& [m1, w1] : a.c)
    for (const auto& [m2, w2] : b.c) {
      bool dead;
      Monomial m = reduce_t(mono_mul(m1, m2), dead);
      if (dead) continue;
      auto w = K_->mul(w1, w2);
      auto it = r.c.find(m);
      if (it == r.c.end()) {
        if (!K_->is_zero(w)) r.c[m] = w;
      } else {
        it->second = K_->add(it->second, w);
        if (K_->is_zero(it->second)) r.c.erase(it);
      }
    }
  return r;
}

bool KTensorCtx::eq(const KTensor& a, const KTensor& b) const {
  return is_zero(sub(a, b));
}

bool KTensorCtx::is_zero(const KTensor& a) const {
  for (const auto& [m, w] : a.c)
    if (!K_->is_zero(w)) return false;
  return true;
}

namespace {

// field-concept adapter so Mat<> can run over a FunctionField
struct KFieldAdapter {
  const FunctionField* ff;
  using El = FunctionField::El;
  El zero() const { return ff->zero(); }
  El one() const { return ff->one(); }
  bool is_zero(const El& a) const { return ff->is_zero(a); }
  bool eq(const El& a, const El& b) const { return ff->eq(a, b); }
  El add(const El& a, const El& b) const { return ff->add(a, b); }
  El sub(const El& a, const El& b) const { return ff->sub(a, b); }
  El mul(const El& a, const El& b) const { return ff->mul(a, b); }
  El div(const El& a, const El& b) const { return ff->div(a, b); }
  El neg(const El& a) const { return ff->neg(a); }
  El inv(const El& a) const { return ff->inv(a); }
};

}  // namespace

KTensor KTensorCtx::inv(const KTensor& a) const {
  if (is_zero(a)) fail(errc::validation_error, "tensor inverse of zero");
  // multiplication matrix on the T-monomial basis
  std::vector<Monomial> basis;
  {
    size_t r = G_->nfactors();
    Monomial m(r, 0);
    for (;;) {
      basis.push_back(m);
      size_t i = 0;
      while (i < r) {
        if (++m[i] < G_->tbound(i)) break;
        m[i] = 0;
        ++i;
      }
      if (i == r || r == 0) break;
    }
  }
  size_t D = basis.size();
  std::map<Monomial, size_t> idx;
  for (size_t i = 0; i < D; ++i) idx[basis[i]] = i;
  KFieldAdapter kf{K_.get()};
  Mat<KFieldAdapter> m(kf, D, D);
  for (size_t j = 0; j < D; ++j) {
    KTensor col;
    col.c[basis[j]] = K_->one();
    KTensor prod = mul(a, col);
    for (const auto& [mm, w] : prod.c) m.at(idx.at(mm), j) = w;
  }
  std::vector<FunctionField::El> rhs(D, K_->zero());
  rhs[idx.at(Monomial(G_->nfactors(), 0))] = K_->one();
  std::vector<FunctionField::El> x;
  if (!solve_linear(kf, m, rhs, x))
    fail(errc::validation_error, "tensor element is not invertible");
  KTensor out;
  for (size_t j = 0; j < D; ++j)
    if (!K_->is_zero(x[j])) out.c[basis[j]] = x[j];
  return out;
}

KTensor KTensorCtx::from_tensor_poly(const MultiPoly& f,
                                     size_t n_tvars) const {
  KTensor out;
  const RingPtr& ring = f.ring();
  for (const auto& [m, c] : f.terms()) {
    Monomial tm(m.begin(), m.begin() + n_tvars);
    bool dead;
    tm = reduce_t(std::move(tm), dead);
    if (dead) continue;
    // base part as a polynomial over the remaining variables
    MultiPoly base(ring);
    Monomial rm = m;
    for (size_t i = 0; i < n_tvars; ++i) rm[i] = 0;
    base.add_term(rm, c);
    auto w = K_->from_poly(base);
    auto it = out.c.find(tm);
    if (it == out.c.end()) {
      if (!K_->is_zero(w)) out.c[tm] = w;
    } else {
      it->second = K_->add(it->second, w);
      if (K_->is_zero(it->second)) out.c.erase(it);
    }
  }
  return out;
}

}  // namespace gnorm
