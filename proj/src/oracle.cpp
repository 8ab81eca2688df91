#include <map>
#include <stdexcept>
#include <vector>

#include "summa/reduce.hpp"

namespace summa {

// Per (orbit, order), f = tau(g) - g reads c(g, n + 1) - c(g, n) = c(f, n).
// With c(g, max + 1) = 0 this forces c(g, n) = -sum_{m >= n} c(f, m), which is
// finitely supported iff the orbit sum vanishes. The witness is unique up to
// an additive constant, so the remaining conditions are global: g must be
// elliptic and f must have no constant term.
SummabilityVerdict oracle_summable(const ZetaExpansion& f) {
  std::map<OresKey, std::vector<std::pair<std::int64_t, SymScalar>>> groups;
  for (const auto& [key, c] : f.terms()) {
    groups[OresKey{key.point.orbit, key.order}].emplace_back(key.point.offset, c);
  }

  TermTable witness;
  for (const auto& [group, entries] : groups) {
    // entries are sorted by offset (map order is orbit, offset, order)
    SymScalar tail;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      auto next = std::next(it);
      tail += it->second;
      std::int64_t stop = next == entries.rend() ? it->first : next->first + 1;
      for (std::int64_t n = it->first; n >= stop; --n) {
        accumulate(witness, TermKey{OrbitPoint{group.orbit, n}, group.order}, -tail);
      }
    }
    if (!tail.is_zero()) return {false, std::nullopt};
  }

  if (!order_one_sum(witness).is_zero() || !f.constant().is_zero()) return {false, std::nullopt};

  ZetaExpansion g = ZetaExpansion::make(SymScalar(), std::move(witness));
  if (g.tau(1) - g != f) throw std::logic_error("oracle witness does not telescope to the input");
  return {true, std::move(g)};
}

}  // namespace summa
