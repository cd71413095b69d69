#include "gnorm/upoly.hpp"

namespace gnorm {

// Squarefree part in char p: f = prod f_i^{e_i} maps to prod f_i. Factors
// with p | e_i vanish from f/gcd(f,f'), so merge with a recursive pass on
// the gcd; derivative-free inputs descend along the p-th root.
UPp up_squarefree_part(const FpK& k, const UPp& f) {
  if (f.is_zero() || f.deg() == 0) return up_monic(k, f);
  UPp d = up_derivative(k, f, k.F.p());
  if (d.is_zero()) {
    UPp g;
    g.c.resize((f.c.size() - 1) / k.F.p() + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
      if (f.c[i] == 0) continue;
      if (i % k.F.p() != 0)
        fail(errc::validation_error, "inconsistent derivative-free polynomial");
      g.c[i / k.F.p()] = k.pth_root(f.c[i]);
    }
    g.trim(k);
    return up_squarefree_part(k, g);
  }
  UPp g = up_gcd(k, f, d);
  if (g.deg() == 0) return up_monic(k, f);
  UPp q, r;
  up_divmod(k, f, g, q, r);
  UPp w = up_monic(k, q);               // factors with multiplicity prime to p
  UPp rest = up_squarefree_part(k, g);  // the rest live inside the gcd
  UPp overlap = up_gcd(k, w, rest);
  up_divmod(k, up_mul(k, w, rest), overlap, q, r);
  return up_monic(k, q);
}

UPp to_upoly(const MultiPoly& f, size_t var) {
  FpK k(f.ring()->field().p());
  UPp r;
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i] > 0)
        fail(errc::validation_error, "polynomial is not univariate");
    if (r.c.size() < m[var] + 1u) r.c.resize(m[var] + 1, 0);
    r.c[m[var]] = c;
  }
  r.trim(k);
  return r;
}

MultiPoly from_upoly(const UPp& f, const RingPtr& ring, size_t var) {
  MultiPoly r(ring);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    Monomial m(ring->nvars(), 0);
    m[var] = static_cast<uint32_t>(i);
    r.add_term(m, f.c[i]);
  }
  return r;
}

}  // namespace gnorm
