#include "summa/poly.hpp"

#include <set>
#include <stdexcept>

namespace summa {

namespace {

// Prime factorization by trial division up to 10^6. A remaining cofactor is
// kept as one "prime", so huge coefficients with two large prime factors can
// hide rational roots; inputs at that size are out of scope.
std::map<mpz_class, int> factorize(mpz_class n) {
  std::map<mpz_class, int> factors;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++factors[mpz_class(p)];
      n /= p;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [prime, exponent] : factorize(n)) {
    std::size_t existing = out.size();
    mpz_class power = 1;
    for (int e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::evaluate(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::taylor_shift(const Rat& a) const {
  // Horner in the ring Q[x]: p(x + a) = (...((c_n)(x + a) + c_{n-1})(x + a) + ...)
  Poly linear(std::vector<Rat>{a, Rat(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + Poly(std::vector<Rat>{*it});
  return acc;
}

Poly Poly::dilate(const Rat& c) const {
  std::vector<Rat> out = coeffs_;
  Rat power(1);
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& p) {
  std::vector<Rat> out = p.coeffs_;
  for (auto& coeff : out) coeff *= c;
  return Poly(std::move(out));
}

PolyDivision divide(const Poly& numerator, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = numerator.coeffs();
  long dd = divisor.degree();
  long qd = numerator.degree() - dd;
  if (qd < 0) return {Poly(), numerator};
  std::vector<Rat> quot(static_cast<std::size_t>(qd + 1));
  Rat lead_inv = divisor.leading().inverse();
  for (long k = qd; k >= 0; --k) {
    Rat factor = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (long i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= factor * divisor.coeff(static_cast<std::size_t>(i));
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  RationalRoots out;
  Poly rest = p;
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    ++out.roots[Rat(0)];
    rest = Poly(std::vector<Rat>(rest.coeffs().begin() + 1, rest.coeffs().end()));
  }
  if (rest.degree() <= 0) {
    out.cofactor = rest;
    return out;
  }

  // Rational root test on the integer-scaled polynomial.
  mpz_class common_den = 1;
  for (const Rat& c : rest.coeffs()) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.den().get_mpz_t());
  mpz_class a0 = (rest.coeff(0) * Rat(common_den)).num();
  mpz_class an = (rest.leading() * Rat(common_den)).num();

  std::set<Rat> candidates;
  for (const mpz_class& num : divisors(a0)) {
    for (const mpz_class& den : divisors(an)) {
      candidates.insert(Rat(num, den));
      candidates.insert(Rat(mpz_class(-num), den));
    }
  }
  const Poly x(std::vector<Rat>{Rat(0), Rat(1)});
  for (const Rat& r : candidates) {
    while (rest.degree() > 0 && rest.evaluate(r).is_zero()) {
      ++out.roots[r];
      rest = divide(rest, x - Poly(std::vector<Rat>{r})).quotient;
    }
  }
  out.cofactor = rest;
  return out;
}

std::vector<Rat> series_quotient(const Poly& num, const Poly& den, std::size_t count) {
  if (den.coeff(0).is_zero()) throw std::domain_error("power series quotient with den(0) = 0");
  Rat inv = den.coeff(0).inverse();
  std::vector<Rat> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rat acc = num.coeff(k);
    for (std::size_t i = 1; i <= k; ++i) acc -= den.coeff(i) * out[k - i];
    out[k] = acc * inv;
  }
  return out;
}

Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat();
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(out);
}

}  // namespace summa
