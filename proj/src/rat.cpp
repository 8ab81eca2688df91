#include "summa/rat.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace summa {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

  std::string_view num_digits = num_part;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!is_digit_run(num_digits) || !is_digit_run(den_part)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_digits), 10);
  if (num_part.front() == '-') num = -num;
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(value_.get_den(), value_.get_num());
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

std::int64_t Rat::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw std::overflow_error("rational " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

mpz_class floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_mpq().get_num_mpz_t(), r.get_mpq().get_den_mpz_t());
  return q;
}

}  // namespace summa
