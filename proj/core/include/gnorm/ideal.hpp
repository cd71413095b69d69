#ifndef GNORM_IDEAL_HPP
#define GNORM_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/groebner.hpp"
#include "gnorm/poly.hpp"

namespace gnorm {

// Finitely generated ideal with write-once cached reduced Groebner bases,
// one per monomial order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }

  // Reduced Groebner basis for ord, computed once and cached.
  const std::vector<MultiPoly>& basis(const MonomialOrder& ord) const;

  bool is_zero() const { return basis(MonomialOrder::Degrevlex()).empty(); }
  bool is_unit() const;
  bool contains(const MultiPoly& f) const;
  bool contains_ideal(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  std::vector<std::string> gen_strings() const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<MultiPoly>> bases;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

MultiPoly normal_form(const MultiPoly& f, const Ideal& I,
                      const MonomialOrder& ord);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, uint32_t k);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);  // (I : J)
// (I : J^infinity) together with the first exponent s >= 1 at which
// (I : J^s) = (I : J^{s+1}).
std::pair<Ideal, unsigned> saturate(const Ideal& I, const Ideal& J);

// Variables of `keep` must be a suffix-independent subset of I's ring; the
// returned ideal lives in the ring spanned by keep (by name).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep);

// A finitely presented commutative algebra A/J with 1 not in J.
class QuotientRing {
 public:
  QuotientRing() = default;
  explicit QuotientRing(RingPtr ambient);  // polynomial ring, J = 0
  explicit QuotientRing(Ideal defining);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  MultiPoly nf(const MultiPoly& f) const;  // canonical representative
  bool is_poly_ring() const { return defining_.is_zero(); }
  bool same(const QuotientRing& o) const;

 private:
  RingPtr ambient_;
  Ideal defining_;
};

// Algebra map between presented rings, one image per source variable.
// Construction checks that every defining relation of the source maps to 0.
class RingMap {
 public:
  RingMap(QuotientRing source, QuotientRing target,
          std::vector<MultiPoly> images);

  const QuotientRing& source() const { return source_; }
  const QuotientRing& target() const { return target_; }
  const std::vector<MultiPoly>& images() const { return images_; }
  MultiPoly apply(const MultiPoly& f) const;

 private:
  QuotientRing source_;
  QuotientRing target_;
  std::vector<MultiPoly> images_;
};

// ker(phi) as an ideal of the source ambient ring (containing the source's
// defining ideal), computed by block elimination on the graph ideal.
Ideal kernel_of_ring_map(const RingMap& phi);

// Dimension of R over F_p as a vector space; nullopt when infinite.
std::optional<uint64_t> vector_space_dim(const QuotientRing& R);

// Standard monomial basis (complement of leading terms); requires the
// defining ideal to be zero-dimensional.
std::vector<Monomial> standard_monomials(const QuotientRing& R);

// Krull dimension of R via independent variable sets modulo leading terms.
size_t krull_dimension(const QuotientRing& R);

// A name based on `base` that does not collide with `existing`.
std::string fresh_var(const std::vector<std::string>& existing,
                      const std::string& base);

// Ring with extra variables appended (names must be fresh).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& more);

// Ring containing only the named variables (in the given order).
RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep);

}  // namespace gnorm

#endif
