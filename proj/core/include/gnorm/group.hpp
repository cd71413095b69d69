#ifndef GNORM_GROUP_HPP
#define GNORM_GROUP_HPP

#include <string>
#include <vector>

#include "gnorm/ideal.hpp"

namespace gnorm {

enum class FactorKind { alpha, mu };

struct GroupFactor {
  FactorKind kind;
  uint32_t exponent;  // m >= 1, the factor has order p^m
};

// An infinitesimal group scheme: a product of additive (alpha) and
// multiplicative (mu) factors of p-power order, presented by its Hopf
// algebra F_p[T1..Tr]/(T_i^{p^m_i}) resp. (T_i^{p^m_i} - 1). All Hopf
// axioms are verified symbolically at construction.
class FiniteGroupScheme {
 public:
  FiniteGroupScheme(PrimeField field, std::vector<GroupFactor> factors);

  const PrimeField& field() const { return field_; }
  const std::vector<GroupFactor>& factors() const { return factors_; }
  size_t nfactors() const { return factors_.size(); }
  uint64_t order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }
  // p^{m_i}, the exponent bound for the i-th coordinate
  uint32_t tbound(size_t i) const { return tbounds_[i]; }
  std::string tname(size_t i) const { return "T" + std::to_string(i + 1); }

  // O(G) with variables T1..Tr.
  const QuotientRing& coordinate_ring() const { return oG_; }

  std::string descriptor() const;  // e.g. "alpha(1) x mu(2)"

 private:
  PrimeField field_;
  std::vector<GroupFactor> factors_;
  std::vector<uint32_t> tbounds_;
  uint64_t order_;
  QuotientRing oG_;
  void verify_hopf_axioms() const;
};

FiniteGroupScheme make_group(int64_t p, const std::vector<GroupFactor>& fs);

// Parses "alpha(1) x mu(2)", optionally prefixed "p=2; G = ...". The
// trivial group is written "1". When the descriptor carries p it must
// match expected_p.
FiniteGroupScheme parse_group(const std::string& text, int64_t expected_p);

}  // namespace gnorm

#endif
