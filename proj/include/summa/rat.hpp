#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace summa {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}
  Rat(int value) : value_(static_cast<long>(value)) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  /// Accepts "n" or "n/d" with an optional leading sign on n and d > 0.
  /// Throws std::invalid_argument on anything else.
  static Rat parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& get_mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rat abs() const;
  Rat inverse() const;
  /// Integer power; negative exponents invert. Throws std::domain_error for 0^e, e < 0.
  Rat pow(long exponent) const;
  /// Checked conversion for values that are known to be small integers.
  std::int64_t to_int64() const;

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// floor(r) as an integer.
mpz_class floor(const Rat& r);

}  // namespace summa
