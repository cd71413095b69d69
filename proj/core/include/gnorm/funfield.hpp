#ifndef GNORM_FUNFIELD_HPP
#define GNORM_FUNFIELD_HPP

#include <map>
#include <memory>
#include <string>

#include "gnorm/group.hpp"
#include "gnorm/upoly.hpp"

namespace gnorm {

// Rational functions F_p(s) as a coefficient field: reduced fractions of
// dense univariate polynomials, monic denominators.
struct RatK {
  FpK base;
  explicit RatK(int64_t p) : base(p) {}
  struct El {
    UPp num, den;
  };
  El normalize(UPp n, UPp d) const;
  El zero() const { return {UPp::zero(), UPp::constant(base, 1)}; }
  El one() const { return {UPp::constant(base, 1), UPp::constant(base, 1)}; }
  El from_poly(UPp n) const { return normalize(std::move(n), UPp::constant(base, 1)); }
  bool is_zero(const El& a) const { return a.num.is_zero(); }
  bool eq(const El& a, const El& b) const;
  El add(const El& a, const El& b) const;
  El sub(const El& a, const El& b) const;
  El mul(const El& a, const El& b) const;
  El div(const El& a, const El& b) const;
  El neg(const El& a) const;
  El inv(const El& a) const;
  // p-th root when it exists (all exponents divisible by p)
  bool pth_root(const El& a, El& out) const;
  std::string str(const El& a, const std::string& var) const;
};

// The function field K of an irreducible plane curve f(s,t) = 0, presented
// as F_p(s)[t] modulo f with t chosen separable over F_p(s). Elements are
// residues of degree < deg_t(f).
class FunctionField {
 public:
  explicit FunctionField(const MultiPoly& curve_poly);

  using El = UP<RatK>;

  const RatK& coeffs() const { return rk_; }
  int64_t p() const { return rk_.base.F.p(); }
  int deg() const { return minpoly_.deg(); }
  const std::string& svar() const { return svar_; }
  const std::string& tvar() const { return tvar_; }

  El zero() const { return El::zero(); }
  El one() const { return El::constant(rk_, rk_.one()); }
  bool is_zero(const El& a) const { return a.is_zero(); }
  bool eq(const El& a, const El& b) const;
  El add(const El& a, const El& b) const { return up_add(rk_, a, b); }
  El sub(const El& a, const El& b) const { return up_sub(rk_, a, b); }
  El mul(const El& a, const El& b) const {
    return up_mod(rk_, up_mul(rk_, a, b), minpoly_);
  }
  El neg(const El& a) const { return up_scale(rk_, a, rk_.neg(rk_.one())); }
  El inv(const El& a) const;
  // the class of t
  El ident_t() const { return up_mod(rk_, El::ident(rk_), minpoly_); }
  El div(const El& a, const El& b) const { return mul(a, inv(b)); }
  El pow(const El& a, uint64_t e) const;

  // Interprets a polynomial over the curve variables (by name) in K.
  El from_poly(const MultiPoly& g) const;
  El from_fraction(const MultiPoly& num, const MultiPoly& den) const;

  bool pth_root(const El& w, El& out) const;
  bool proot(const El& w, uint32_t m, El& out) const;  // p^m-th root

  std::string str(const El& w) const;

 private:
  RatK rk_;
  std::string svar_, tvar_;
  UP<RatK> minpoly_;
};

using FunFieldPtr = std::shared_ptr<const FunctionField>;

// An element of O(G) (x) K: canonical T-monomials mapped to K-coefficients.
struct KTensor {
  std::map<Monomial, FunctionField::El> c;
};

// Arithmetic for O(G) (x) K with the group's exponent-reduction rules.
class KTensorCtx {
 public:
  KTensorCtx(const FiniteGroupScheme& G, FunFieldPtr K)
      : G_(&G), K_(std::move(K)) {}

  const FiniteGroupScheme& group() const { return *G_; }
  const FunctionField& field() const { return *K_; }

  KTensor zero() const { return {}; }
  KTensor embed(const FunctionField::El& w) const;
  KTensor add(const KTensor& a, const KTensor& b) const;
  KTensor sub(const KTensor& a, const KTensor& b) const;
  KTensor mul(const KTensor& a, const KTensor& b) const;
  KTensor inv(const KTensor& a) const;  // linear solve on the T-basis
  bool eq(const KTensor& a, const KTensor& b) const;
  bool is_zero(const KTensor& a) const;

  // Converts a canonical tensor polynomial (in a TensorCtx ring layout:
  // T-variables first, base variables after) whose base coefficients are
  // interpreted in K via from_poly.
  KTensor from_tensor_poly(const MultiPoly& f, size_t n_tvars) const;

 private:
  const FiniteGroupScheme* G_;
  FunFieldPtr K_;
  Monomial reduce_t(Monomial m, bool& dead) const;
};

}  // namespace gnorm

#endif
