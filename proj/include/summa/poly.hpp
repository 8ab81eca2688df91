#pragma once

#include <map>
#include <vector>

#include "summa/rat.hpp"

namespace summa {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; the leading coefficient of a
/// nonzero polynomial is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(const Rat& c, std::size_t degree);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat evaluate(const Rat& x) const;
  /// p(x + a).
  Poly taylor_shift(const Rat& a) const;
  /// p(c x).
  Poly dilate(const Rat& c) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
PolyDivision divide(const Poly& numerator, const Poly& divisor);

/// Rational roots with multiplicity, plus whatever cofactor does not split
/// into linear factors over Q (a constant when the polynomial splits).
struct RationalRoots {
  std::map<Rat, int> roots;
  Poly cofactor;
};

RationalRoots rational_roots(const Poly& p);

/// First `count` coefficients of the power series num/den at 0; den(0) != 0.
std::vector<Rat> series_quotient(const Poly& num, const Poly& den, std::size_t count);

/// binomial(n, k) as a rational.
Rat binomial(long n, long k);

}  // namespace summa
