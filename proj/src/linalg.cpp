#include "summa/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace summa {

std::vector<std::vector<Rat>> nullspace(RatMatrix m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    Rat inv = m[rank][col].inverse();
    for (auto& entry : m[rank]) entry *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rat factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = Rat(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<Rat>& v) {
  mpz_class lcm = 1;
  for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class gcd = 0;
  for (const Rat& x : v) {
    mpz_class n = (x * Rat(lcm)).num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (gcd == 0) throw std::invalid_argument("zero vector has no primitive multiple");
  int sign = 0;
  for (const auto& n : out) {
    if (n != 0) {
      sign = sgn(n);
      break;
    }
  }
  for (auto& n : out) {
    n /= gcd;
    if (sign < 0) n = -n;
  }
  return out;
}

}  // namespace summa
