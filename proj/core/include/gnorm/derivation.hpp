#ifndef GNORM_DERIVATION_HPP
#define GNORM_DERIVATION_HPP

#include "gnorm/coaction.hpp"

namespace gnorm {

// An F_p-linear derivation of R, given by its values on the variables.
// Construction verifies the Leibniz compatibility with every defining
// relation, so D descends to the quotient.
class Derivation {
 public:
  Derivation(QuotientRing R, std::vector<MultiPoly> images);

  const QuotientRing& base() const { return base_; }
  const std::vector<MultiPoly>& images() const { return images_; }
  MultiPoly apply(const MultiPoly& f) const;
  bool is_zero() const;
  bool equals(const Derivation& o) const;

 private:
  QuotientRing base_;
  std::vector<MultiPoly> images_;
};

// D^p by p-fold composition on the variables (again a derivation).
Derivation derivation_p_power(const Derivation& D);

// Integrates D to a coaction: alpha_p when D^p = 0 (divided-power
// exponential), mu_p when D^p = D (eigenspace decomposition); otherwise
// NotRestricted, reporting D^p.
Coaction coaction_from_derivation(const Derivation& D);

// Tangent-level derivation of a coaction along one group factor (the
// coefficient linear in that factor's augmentation coordinate).
Derivation derivation_of(const Coaction& a, size_t factor = 0);

// The diagonal mu_p^n action x_i -> T_i (x) x_i on F_p[x_1..x_n].
Coaction mu_standard_action(int64_t p, size_t n);

// The alpha_p^m action generated by the commuting derivations f_i d/dx_1
// for f_i in F_p[x_1^p, ..., x_n^p], linearly independent over F_p.
Coaction alpha_family_action(const RingPtr& ring,
                             const std::vector<MultiPoly>& fs);

}  // namespace gnorm

#endif
