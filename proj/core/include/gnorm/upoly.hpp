#ifndef GNORM_UPOLY_HPP
#define GNORM_UPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gnorm/fp.hpp"
#include "gnorm/poly.hpp"

namespace gnorm {

// Dense univariate polynomials over an abstract field K. K supplies the
// element type and arithmetic; instantiated with F_p, F_q and rational
// function coefficients.
//
// concept: K::El, k.zero(), k.one(), k.is_zero(e), k.eq(a,b),
//          k.add/sub/mul/div(a,b), k.neg(a), k.inv(a)
template <class K>
struct UP {
  using El = typename K::El;
  std::vector<El> c;  // c[i] multiplies x^i; no trailing zeros

  static UP make(const K& k, std::vector<El> coeffs) {
    UP f{std::move(coeffs)};
    f.trim(k);
    return f;
  }
  static UP zero() { return UP{}; }
  static UP constant(const K& k, El v) {
    UP f{{std::move(v)}};
    f.trim(k);
    return f;
  }
  static UP ident(const K& k) { return UP{{k.zero(), k.one()}}; }

  void trim(const K& k) {
    while (!c.empty() && k.is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  El lead(const K& k) const { return is_zero() ? k.zero() : c.back(); }
};

template <class K>
UP<K> up_add(const K& k, const UP<K>& a, const UP<K>& b) {
  UP<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  r.trim(k);
  return r;
}

template <class K>
UP<K> up_sub(const K& k, const UP<K>& a, const UP<K>& b) {
  UP<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.sub(r.c[i], b.c[i]);
  r.trim(k);
  return r;
}

template <class K>
UP<K> up_mul(const K& k, const UP<K>& a, const UP<K>& b) {
  if (a.is_zero() || b.is_zero()) return UP<K>::zero();
  UP<K> r;
  r.c.resize(a.c.size() + b.c.size() - 1, k.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  r.trim(k);
  return r;
}

template <class K>
UP<K> up_scale(const K& k, const UP<K>& a, const typename K::El& s) {
  UP<K> r = a;
  for (auto& e : r.c) e = k.mul(e, s);
  r.trim(k);
  return r;
}

// division with remainder; b nonzero
template <class K>
void up_divmod(const K& k, const UP<K>& a, const UP<K>& b, UP<K>& q,
               UP<K>& r) {
  q = UP<K>::zero();
  r = a;
  if (b.is_zero()) fail(errc::validation_error, "univariate division by zero");
  auto binv = k.inv(b.c.back());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    size_t shift = r.deg() - b.deg();
    auto coef = k.mul(r.c.back(), binv);
    if (q.c.size() < shift + 1) q.c.resize(shift + 1, k.zero());
    q.c[shift] = k.add(q.c[shift], coef);
    for (size_t i = 0; i < b.c.size(); ++i) {
      size_t idx = i + shift;
      r.c[idx] = k.sub(r.c[idx], k.mul(coef, b.c[i]));
    }
    r.trim(k);
  }
  q.trim(k);
}

template <class K>
UP<K> up_mod(const K& k, const UP<K>& a, const UP<K>& b) {
  UP<K> q, r;
  up_divmod(k, a, b, q, r);
  return r;
}

template <class K>
UP<K> up_monic(const K& k, const UP<K>& a) {
  if (a.is_zero()) return a;
  return up_scale(k, a, k.inv(a.c.back()));
}

template <class K>
UP<K> up_gcd(const K& k, UP<K> a, UP<K> b) {
  while (!b.is_zero()) {
    UP<K> r = up_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(k, a);
}

template <class K>
UP<K> up_derivative(const K& k, const UP<K>& a, int64_t char_p) {
  UP<K> r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1, k.zero());
  for (size_t i = 1; i < a.c.size(); ++i) {
    int64_t mult = static_cast<int64_t>(i % char_p);
    typename K::El e = k.zero();
    for (int64_t t = 0; t < mult; ++t) e = k.add(e, a.c[i]);
    r.c[i - 1] = e;
  }
  r.trim(k);
  return r;
}

template <class K>
typename K::El up_eval(const K& k, const UP<K>& a, const typename K::El& x) {
  auto acc = k.zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a.c[i]);
  return acc;
}

template <class K>
UP<K> up_powmod(const K& k, UP<K> base, uint64_t e, const UP<K>& mod) {
  UP<K> acc = UP<K>::constant(k, k.one());
  base = up_mod(k, base, mod);
  while (e) {
    if (e & 1) acc = up_mod(k, up_mul(k, acc, base), mod);
    base = up_mod(k, up_mul(k, base, base), mod);
    e >>= 1;
  }
  return acc;
}

// F_p as a field object for the templates above.
struct FpK {
  using El = int64_t;
  PrimeField F;
  explicit FpK(int64_t p) : F(p) {}
  El zero() const { return 0; }
  El one() const { return 1 % F.p(); }
  bool is_zero(El a) const { return a == 0; }
  bool eq(El a, El b) const { return a == b; }
  El add(El a, El b) const { return F.add(a, b); }
  El sub(El a, El b) const { return F.sub(a, b); }
  El mul(El a, El b) const { return F.mul(a, b); }
  El div(El a, El b) const { return F.div(a, b); }
  El neg(El a) const { return F.neg(a); }
  El inv(El a) const { return F.inv(a); }
  El pth_root(El a) const { return a; }  // Frobenius is the identity on F_p
};

using UPp = UP<FpK>;

// Squarefree part over F_p (handles the derivative-vanishing case by p-th
// root descent, exact since F_p is perfect).
UPp up_squarefree_part(const FpK& k, const UPp& f);

// conversions between dense univariate and sparse multivariate form
UPp to_upoly(const MultiPoly& f, size_t var);
MultiPoly from_upoly(const UPp& f, const RingPtr& ring, size_t var);

}  // namespace gnorm

#endif
