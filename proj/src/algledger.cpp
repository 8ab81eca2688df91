#include "summa/algledger.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "summa/errors.hpp"

namespace summa {

namespace {

const OrbitId kHat = OrbitId::hat();

TermKey at(const OrbitId& orbit, std::int64_t offset, int order) { return TermKey{OrbitPoint{orbit, offset}, order}; }

SymScalar d_symbol(const TermKey& key, const Rat& scale) {
  return SymScalar::symbol(sym::d(key.order, key.point.orbit.label()), scale);
}

// res * d_j(omega) * X for a curve constant X, as an opaque monomial.
SymScalar d_times(const TermKey& key, const Rat& res, const std::string& other) {
  return SymScalar::symbol(sym::product(sym::d(key.order, key.point.orbit.label()), other), res);
}

}  // namespace

bool check_admissible(const ResidueTable& t) {
  for (const auto& [key, res] : t) {
    if (key.point.orbit.is_hat() || key.point.offset < 1 || key.order < 1) return false;
  }
  return true;
}

LedgerReport ledger_reduce(const ResidueTable& t) {
  for (const auto& [key, res] : t) {
    if (key.point.orbit.is_hat()) throw NotAdmissible("residue entry on the anchor orbit HAT");
    if (key.point.offset < 1) {
      throw NotAdmissible("residue entry at offset " + std::to_string(key.point.offset) + " on orbit " +
                          key.point.orbit.label() + "; admissible offsets are >= 1");
    }
    if (key.order < 1) throw NotAdmissible("residue order must be >= 1");
  }

  LedgerReport out;
  SymScalar order0 = SymScalar::symbol(sym::fhat());
  // R_m = sum_{omega, j} res(f, Q_omega + m S, j) d_j(omega), and the same
  // weights kept per entry for the order-0 bookkeeping.
  std::map<std::int64_t, SymScalar> r;
  std::map<std::int64_t, std::vector<std::pair<TermKey, Rat>>> by_offset;

  // First reduction: f + sum res * Delta^(m) phi_{omega,j}. The residues of
  // Delta^(m) phi_{omega,j} are +1 at (Q_omega, j), -1 at (Q_omega + m S, j),
  // d_j(omega) at (Qhat, 1), -d_j(omega) at (Qhat + m S, 1); its value at Qhat
  // is -phi_{omega,j}(Qhat - m S).
  for (const auto& [key, res] : t) accumulate(out.ftilde, key, SymScalar(res));
  for (const auto& [key, res] : t) {
    const std::int64_t m = key.point.offset;
    accumulate(out.ftilde, at(key.point.orbit, 0, key.order), SymScalar(res));
    accumulate(out.ftilde, key, SymScalar(-res));
    accumulate(out.ftilde, at(kHat, 0, 1), d_symbol(key, res));
    accumulate(out.ftilde, at(kHat, m, 1), d_symbol(key, -res));
    order0.add_scaled(-res, SymScalar::symbol(sym::phi(key.point.orbit.label(), key.order, m)));
    r[m] += d_symbol(key, res);
    by_offset[m].emplace_back(key, res);
  }

  // Second reduction: fbar = ftilde - sum_{m >= 2} sum_{k=2}^{m} R_m Delta^(1) psi_k.
  // Delta^(1) psi_k has residues -1 at Qhat, +1 at Qhat + (k-1) S, +1 at
  // Qhat + S, -1 at Qhat + k S, and value -psi_k(Qhat - S) at Qhat.
  out.fbar = out.ftilde;
  SymScalar order0_expanded = order0;
  for (const auto& [m, rm] : r) {
    for (std::int64_t k = 2; k <= m; ++k) {
      accumulate(out.fbar, at(kHat, 0, 1), rm);
      accumulate(out.fbar, at(kHat, k - 1, 1), -rm);
      accumulate(out.fbar, at(kHat, 1, 1), -rm);
      accumulate(out.fbar, at(kHat, k, 1), rm);
      for (const auto& [key, res] : by_offset[m]) {
        order0_expanded += d_times(key, res, sym::psi(static_cast<int>(k)));
      }
    }
  }

  for (const auto& [key, res] : t) {
    out.pano1 += d_symbol(key, res * Rat(static_cast<long>(key.point.offset)));
  }
  out.pano0 = order0;
  for (const auto& [key, res] : t) {
    // Psi_1 is the zero function.
    if (key.point.offset >= 2) out.pano0 += d_times(key, res, sym::Psi(key.point.offset));
  }

  // Cross-checks against the simulated reductions.
  for (const auto& [key, c] : out.fbar) {
    bool on_rep = !key.point.orbit.is_hat() && key.point.offset == 0;
    bool on_hat = key.point.orbit.is_hat() && key.order == 1 && (key.point.offset == 0 || key.point.offset == 1);
    if (!on_rep && !on_hat) throw std::logic_error("ledger left a residue outside the canonical support");
  }
  auto coefficient = [&](const TermKey& key) {
    auto it = out.fbar.find(key);
    return it == out.fbar.end() ? SymScalar() : it->second;
  };
  if (coefficient(at(kHat, 0, 1)) != out.pano1 || coefficient(at(kHat, 1, 1)) != -out.pano1) {
    throw std::logic_error("ledger order-1 residue at Qhat disagrees with pano1");
  }
  SymScalar psi_form = out.pano0;
  for (const auto& [key, res] : t) {
    if (key.point.offset < 2) continue;
    psi_form -= d_times(key, res, sym::Psi(key.point.offset));
    for (std::int64_t k = 2; k <= key.point.offset; ++k) psi_form += d_times(key, res, sym::psi(static_cast<int>(k)));
  }
  if (psi_form != order0_expanded) throw std::logic_error("ledger order-0 residue disagrees with pano0");
  return out;
}

}  // namespace summa
