#ifndef GNORM_GROEBNER_HPP
#define GNORM_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "gnorm/poly.hpp"

namespace gnorm {

// Per-thread engine counters, reported by the CLI as advisory statistics.
struct EngineStats {
  uint64_t spairs_reduced = 0;
  uint64_t max_basis = 0;
  void absorb_basis_size(size_t n) {
    if (n > max_basis) max_basis = n;
  }
};

EngineStats& engine_stats();
void engine_stats_reset();

// Paranoid mode re-checks the Buchberger criterion on every emitted basis
// and the membership round trip. Enabled by the test suites.
void engine_set_paranoid(bool on);
bool engine_paranoid();

// S-pair budget; reads GNORM_MAX_SPAIRS (per engine invocation) from the
// environment, defaulting to 1'000'000. Breach throws errc::limit_exceeded.
uint64_t engine_max_spairs();

// Reduced Groebner basis of the ideal generated by gens: monic, autoreduced,
// sorted ascending by leading monomial. The zero ideal yields an empty basis.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const MonomialOrder& ord);

// Unique remainder of f modulo a Groebner basis.
MultiPoly poly_normal_form(const MultiPoly& f,
                           const std::vector<MultiPoly>& gb,
                           const MonomialOrder& ord);

// Full reduction by an arbitrary (non-basis) divisor set; remainder only.
MultiPoly poly_reduce(const MultiPoly& f, const std::vector<MultiPoly>& divs,
                      const MonomialOrder& ord);

}  // namespace gnorm

#endif
