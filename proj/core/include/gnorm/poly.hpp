#ifndef GNORM_POLY_HPP
#define GNORM_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gnorm/fp.hpp"

namespace gnorm {

// Exponent vector; length equals the number of ring variables.
using Monomial = std::vector<uint32_t>;

uint32_t total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, assumes a|b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Total monomial orders compatible with multiplication.
struct MonomialOrder {
  enum Kind { lex, degrevlex, elim_block } kind = degrevlex;
  // For elim_block: variables [0, split) form the senior block; any monomial
  // involving them ranks above every monomial in the junior block alone.
  size_t split = 0;

  static MonomialOrder Lex() { return {lex, 0}; }
  static MonomialOrder Degrevlex() { return {degrevlex, 0}; }
  static MonomialOrder ElimBlock(size_t split) { return {elim_block, split}; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  std::string key() const;  // cache key
};

// A polynomial ring F_p[x_1, ..., x_n] (the ambient ring of everything).
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars);

  const PrimeField& field() const { return field_; }
  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(size_t i) const { return vars_[i]; }
  // Index of a named variable, or npos.
  size_t var_index(const std::string& name) const;
  static constexpr size_t npos = static_cast<size_t>(-1);

  bool same(const PolyRing& o) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(int64_t p, std::vector<std::string> vars);

// Sparse exact multivariate polynomial over F_p. Terms map monomials to
// nonzero canonical coefficients; the zero polynomial has no terms.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, int64_t c);
  static MultiPoly variable(RingPtr ring, size_t i, uint32_t e = 1);
  static MultiPoly monomial(RingPtr ring, Monomial m, int64_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The unit test "is this a nonzero constant" used for unit-ideal checks.
  bool is_unit_constant() const { return is_constant() && !is_zero(); }
  size_t nterms() const { return terms_.size(); }
  uint32_t degree() const;                 // total degree, 0 for 0
  uint32_t degree_in(size_t var) const;    // degree in one variable
  int64_t coeff(const Monomial& m) const;  // 0 if absent

  void add_term(const Monomial& m, int64_t c);  // accumulates, drops zeros

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(int64_t c) const;
  MultiPoly mul_monomial(const Monomial& m, int64_t c) const;
  MultiPoly pow(uint32_t e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  // Container order only (used for canonical sorting, not reduction).
  bool operator<(const MultiPoly& o) const { return terms_ < o.terms_; }

  // Leading data with respect to an order; polynomial must be nonzero.
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  int64_t leading_coeff(const MonomialOrder& ord) const;
  MultiPoly monic(const MonomialOrder& ord) const;

  // Substitute images[i] for variable i; images live in an arbitrary ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images,
                       const RingPtr& target) const;
  // Map into a ring containing the same variable names (by name lookup).
  MultiPoly lift_to(const RingPtr& target) const;

  MultiPoly derivative(size_t var) const;

  std::string str() const;  // canonical text form (degrevlex descending)

 private:
  RingPtr ring_;
  std::map<Monomial, int64_t> terms_;
};

// Exact division by a single polynomial: returns q with a = q*b, or nullopt
// semantics via a bool. Used for colon-ideal postprocessing.
bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q);

}  // namespace gnorm

#endif
