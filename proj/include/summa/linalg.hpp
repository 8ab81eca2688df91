#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "summa/rat.hpp"

namespace summa {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Basis of {x : M x = 0} read off the reduced row echelon form of M, one
/// vector per free column. M has `cols` columns; rows may be empty.
std::vector<std::vector<Rat>> nullspace(RatMatrix m, std::size_t cols);

/// The integer multiple of v with coprime entries whose first nonzero entry
/// is positive. v must be nonzero.
std::vector<mpz_class> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace summa
