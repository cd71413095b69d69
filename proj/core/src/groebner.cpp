#include "gnorm/groebner.hpp"

#include <atomic>
#include <cstdlib>

#include "gnorm/modgb.hpp"

namespace gnorm {

EngineStats& engine_stats() {
  thread_local EngineStats stats;
  return stats;
}

void engine_stats_reset() { engine_stats() = EngineStats{}; }

namespace {
std::atomic<bool> g_paranoid{false};
}

void engine_set_paranoid(bool on) { g_paranoid.store(on); }
bool engine_paranoid() { return g_paranoid.load(); }

uint64_t engine_max_spairs() {
  if (const char* env = std::getenv("GNORM_MAX_SPAIRS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000;
}

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const MonomialOrder& ord) {
  std::vector<VecPoly> vgens;
  for (const auto& g : gens)
    if (!g.is_zero()) vgens.push_back(VecPoly{g});
  ModOrder mo{ord, 0};
  auto vgb = module_groebner(vgens, mo);
  std::vector<MultiPoly> gb;
  for (auto& v : vgb) gb.push_back(std::move(v[0]));

  if (engine_paranoid() && !gb.empty()) {
    // Buchberger criterion re-check and generator round trip.
    for (size_t i = 0; i < gb.size(); ++i) {
      for (size_t j = i + 1; j < gb.size(); ++j) {
        const Monomial &li = gb[i].leading_monomial(ord),
                       &lj = gb[j].leading_monomial(ord);
        Monomial l = mono_lcm(li, lj);
        MultiPoly s = gb[i].mul_monomial(mono_div(l, li), 1) -
                      gb[j].mul_monomial(mono_div(l, lj), 1);
        if (!poly_normal_form(s, gb, ord).is_zero())
          fail(errc::validation_error, "paranoid: S-polynomial does not vanish");
      }
    }
    for (const auto& g : gens)
      if (!poly_normal_form(g, gb, ord).is_zero())
        fail(errc::validation_error, "paranoid: generator outside basis ideal");
  }
  return gb;
}

MultiPoly poly_normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gb,
                           const MonomialOrder& ord) {
  std::vector<VecPoly> vgb;
  for (const auto& g : gb)
    if (!g.is_zero()) vgb.push_back(VecPoly{g});
  ModOrder mo{ord, 0};
  VecPoly r = module_normal_form(VecPoly{f}, vgb, mo);
  return r[0];
}

MultiPoly poly_reduce(const MultiPoly& f, const std::vector<MultiPoly>& divs,
                      const MonomialOrder& ord) {
  return poly_normal_form(f, divs, ord);
}

}  // namespace gnorm
