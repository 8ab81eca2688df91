#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "summa/reduce.hpp"
#include "summa/torus.hpp"
#include "summa/zeta_expansion.hpp"

namespace summa {

/// Zeros (m > 0) and poles (m < 0) of an elliptic function a, by point.
/// Zero multiplicities are not stored.
class DivisorData {
 public:
  DivisorData() = default;
  explicit DivisorData(const std::map<OrbitPoint, std::int64_t>& entries);

  const std::map<OrbitPoint, std::int64_t>& entries() const { return entries_; }
  std::int64_t degree() const;

 private:
  std::map<OrbitPoint, std::int64_t> entries_;
};

/// a'/a = eta(b) + sum m(p) zeta(z - p). eta(b) is the opaque symbol
/// sym::eta_b(tag). Throws DegreeViolation when the degree is not zero.
ZetaExpansion logderiv(const DivisorData& d, std::string_view tag = {});

/// Entry (row r, column i) is sum_n m_i(orbits[r], n).
struct ResidueMatrix {
  std::vector<OrbitId> orbits;
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t cols = 0;
};

ResidueMatrix residue_matrix(const std::vector<DivisorData>& divisors);

/// Primitive integer l != 0 with sum_i l_i v_i = 0 over the columns v_i, or
/// nullopt when the columns are independent. Among the normalized nullspace
/// basis vectors the lexicographically smallest is returned.
std::optional<std::vector<mpz_class>> diffdep(const std::vector<DivisorData>& divisors);

/// Checks ores(delta^r(a'/a), omega, r + 1) == (-1)^r r! ores(a'/a, omega, 1)
/// on every orbit. Requires 0 <= r <= 8.
bool order_reduction_check(const DivisorData& d, int r);

/// Verdict for sum_i l_i (a_i'/a_i)'. The derivative kills every eta(b_i).
SummabilityVerdict combination_summable(const std::vector<DivisorData>& divisors, const std::vector<mpz_class>& ell);

}  // namespace summa
