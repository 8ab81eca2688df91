#pragma once

#include <cstdint>
#include <optional>

#include "summa/zeta_expansion.hpp"

namespace summa {

/// Outcome of reducing f modulo summable functions.
///
/// Invariants: f - (tau(witness) - witness) == canonical exactly; canonical
/// has poles only at offset 0 of each orbit and at offsets {0, 1} of HAT;
/// summable <=> canonical == 0.
struct ReductionReport {
  ZetaExpansion canonical;
  ZetaExpansion witness;
  bool summable = false;
  OresTable ores;
  SymScalar pano0;
  SymScalar pano1;
};

/// Three-stage reduction: higher-order poles are telescoped onto orbit
/// representatives, then simple poles off HAT, then simple poles on HAT are
/// collected at 0 and s. The canonical form is
///
///   pano0 + pano1 (zeta(z - s) - zeta(z))
///         + sum_omega sum_j ores(f, omega, j)-weighted terms at q_omega,
///
/// i.e. the HAT zeta(z) coefficient is ores(HAT, 1) - pano1 and the HAT
/// zeta(z - s) coefficient is pano1.
ReductionReport reduce(const ZetaExpansion& f);

struct SummabilityVerdict {
  bool summable = false;
  /// Present iff summable; tau(witness) - witness == f.
  std::optional<ZetaExpansion> witness;
};

/// Complete residue criterion: f is summable iff all orbital residues and
/// both panorbital residues vanish.
SummabilityVerdict is_summable(const ZetaExpansion& f);

/// True iff all orbital residues vanish, i.e. f reduces into the span of
/// {1, zeta(z + s) - zeta(z)}.
bool almost_summable(const ZetaExpansion& f);

/// Change of representative on one non-anchor orbit: q_omega is replaced by
/// q_omega + k s + b1 lambda1 + b2 lambda2.
struct RepinDelta {
  OrbitId orbit;
  std::int64_t k = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
};

struct PanorbitalPair {
  SymScalar pano0;
  SymScalar pano1;

  friend bool operator==(const PanorbitalPair&, const PanorbitalPair&) = default;
};

/// eta(b1 lambda1 + b2 lambda2) as the formal scalar b1*eta1 + b2*eta2.
SymScalar quasi_period(std::int64_t b1, std::int64_t b2);

/// Panorbital residues relative to the re-pinned representative set:
///   pano0' = pano0 + eta(lambda) ores(omega, 1)
///   pano1' = pano1 - k ores(omega, 1)
/// Throws AnchorMove for the HAT orbit and SymbolicProduct when lambda != 0
/// and ores(omega, 1) is not rational.
PanorbitalPair repin(const OresTable& ores, const SymScalar& pano0, const SymScalar& pano1,
                     const RepinDelta& delta);

/// Re-expresses f itself relative to the re-pinned representative set, by
/// rewriting every zeta term on the moved orbit. Independent of `repin`: the
/// panorbital residues of the result are read directly off the new table.
ZetaExpansion repin_expansion(const ZetaExpansion& f, const RepinDelta& delta);

/// Brute-force check: solves the telescoping recurrence per (orbit, order)
/// for a finitely supported witness, then checks that the witness is elliptic
/// and that f has no constant term.
SummabilityVerdict oracle_summable(const ZetaExpansion& f);

}  // namespace summa
