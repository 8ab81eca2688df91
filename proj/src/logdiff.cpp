#include "summa/logdiff.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "summa/errors.hpp"
#include "summa/linalg.hpp"

namespace summa {

DivisorData::DivisorData(const std::map<OrbitPoint, std::int64_t>& entries) {
  for (const auto& [p, m] : entries) {
    if (m != 0) entries_.emplace(p, m);
  }
}

std::int64_t DivisorData::degree() const {
  std::int64_t total = 0;
  for (const auto& [p, m] : entries_) total += m;
  return total;
}

ZetaExpansion logderiv(const DivisorData& d, std::string_view tag) {
  if (std::int64_t deg = d.degree(); deg != 0) {
    throw DegreeViolation("divisor multiplicities sum to " + std::to_string(deg) + ", expected 0");
  }
  TermTable terms;
  for (const auto& [p, m] : d.entries()) accumulate(terms, TermKey{p, 1}, SymScalar(Rat(static_cast<long>(m))));
  return ZetaExpansion::make(SymScalar::symbol(sym::eta_b(tag)), std::move(terms));
}

ResidueMatrix residue_matrix(const std::vector<DivisorData>& divisors) {
  std::set<OrbitId> orbits;
  for (const auto& d : divisors) {
    for (const auto& [p, m] : d.entries()) orbits.insert(p.orbit);
  }
  ResidueMatrix out;
  out.orbits.assign(orbits.begin(), orbits.end());
  out.cols = divisors.size();
  out.rows.assign(out.orbits.size(), std::vector<std::int64_t>(out.cols, 0));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (const auto& [p, m] : divisors[i].entries()) {
      auto row = std::lower_bound(out.orbits.begin(), out.orbits.end(), p.orbit) - out.orbits.begin();
      out.rows[static_cast<std::size_t>(row)][i] += m;
    }
  }
  return out;
}

std::optional<std::vector<mpz_class>> diffdep(const std::vector<DivisorData>& divisors) {
  for (const auto& d : divisors) {
    if (d.degree() != 0) throw DegreeViolation("divisor of nonzero degree");
  }
  ResidueMatrix matrix = residue_matrix(divisors);
  RatMatrix m;
  for (const auto& row : matrix.rows) {
    std::vector<Rat> r;
    for (std::int64_t v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(std::move(r));
  }
  std::optional<std::vector<mpz_class>> best;
  for (const auto& v : nullspace(std::move(m), matrix.cols)) {
    std::vector<mpz_class> candidate = primitive_integer_vector(v);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return best;
}

bool order_reduction_check(const DivisorData& d, int r) {
  if (r < 0 || r > 8) throw std::invalid_argument("order_reduction_check needs 0 <= r <= 8");
  const ZetaExpansion base = logderiv(d);
  ZetaExpansion derived = base;
  Rat factor(1);
  for (int i = 1; i <= r; ++i) {
    derived = derived.derive();
    factor *= Rat(-i);
  }
  for (const OrbitId& orbit : base.orbits()) {
    if (derived.ores(orbit, r + 1) != scale(factor, base.ores(orbit, 1))) return false;
  }
  return true;
}

SummabilityVerdict combination_summable(const std::vector<DivisorData>& divisors,
                                        const std::vector<mpz_class>& ell) {
  if (ell.size() != divisors.size()) throw std::invalid_argument("one coefficient per divisor expected");
  ZetaExpansion total;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    total += logderiv(divisors[i], std::to_string(i)).derive().scale(Rat(ell[i]));
  }
  return is_summable(total);
}

}  // namespace summa
