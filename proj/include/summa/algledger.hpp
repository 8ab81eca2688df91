#pragma once

#include <map>

#include "summa/rat.hpp"
#include "summa/sym_scalar.hpp"
#include "summa/zeta_expansion.hpp"

namespace summa {

/// Local residues res(f, Q_omega + m S, j) keyed by ((omega, m), j). No zero
/// values are stored.
using ResidueTable = std::map<TermKey, Rat>;

/// Admissible: no entry on HAT and every offset m >= 1.
bool check_admissible(const ResidueTable& t);

/// Residue tables after the two reductions f -> ftilde -> fbar, together
/// with the order-1 and order-0 panorbital residues. Curve constants stay
/// formal: d_j(omega), phi_{omega,j}(Qhat - m S), Psi_m(Qhat - S), f(Qhat).
///
/// fbar lives on {(omega, 0)} for omega != HAT and on (HAT, 0), (HAT, 1) in
/// order 1 only, with res(fbar, HAT + 0, 1) = pano1 = -res(fbar, HAT + 1, 1).
struct LedgerReport {
  TermTable ftilde;
  TermTable fbar;
  SymScalar pano1;
  SymScalar pano0;
};

/// Throws NotAdmissible.
LedgerReport ledger_reduce(const ResidueTable& t);

}  // namespace summa
