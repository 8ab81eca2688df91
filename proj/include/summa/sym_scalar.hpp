#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "summa/rat.hpp"

namespace summa {

// Symbol names follow a fixed grammar so that reports are bit-stable:
//
//   symbol   ::= "1" | atom | atom "*" atom
//   atom     ::= "eta1" | "eta2" | "fhat" | eta_b | d | phi | psi | Psi | free
//   eta_b    ::= "eta_b" [ "_" tag ]
//   d        ::= "d_" order "_" label                 d_j(omega)
//   phi      ::= "phi_" label "_" order "@" offset    phi_{omega,j}(Qhat - m S)
//   psi      ::= "psi_" order                         psi_k(Qhat - S)
//   Psi      ::= "Psi_" offset                        Psi_m(Qhat - S)
//   free     ::= ident [ "@" digits ]
//   label    ::= [A-Za-z][A-Za-z0-9]*
//   ident    ::= [A-Za-z][A-Za-z0-9_]*
//   tag      ::= [A-Za-z0-9]+
//   order, offset ::= [1-9][0-9]*
//
// "1" is the rational unit. Every named form above is also a valid `free`
// symbol, so user input may carry any identifier. A product "a*b" is an opaque
// monomial of two curve constants with a <= b; arithmetic never forms one.
namespace sym {

inline constexpr std::string_view kUnit = "1";

std::string eta1();
std::string eta2();
std::string fhat();
std::string eta_b(std::string_view tag = {});
std::string d(int order, std::string_view orbit_label);
std::string phi(std::string_view orbit_label, int order, std::int64_t offset);
std::string psi(int order);
std::string Psi(std::int64_t offset);
/// The monomial a*b with its factors in sorted order.
std::string product(std::string_view a, std::string_view b);

bool is_valid(std::string_view name);

}  // namespace sym

/// Exact Q-linear combination of opaque symbols. Symbols are never multiplied
/// with each other; the type is a Q-module, not a ring.
class SymScalar {
 public:
  using Terms = std::map<std::string, Rat, std::less<>>;

  SymScalar() = default;
  SymScalar(const Rat& value);
  SymScalar(long value) : SymScalar(Rat(value)) {}
  SymScalar(int value) : SymScalar(Rat(value)) {}

  static SymScalar symbol(std::string name, const Rat& coeff = Rat(1));

  const Terms& terms() const { return terms_; }
  Rat coeff(std::string_view name) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rat> as_rational() const;

  SymScalar& operator+=(const SymScalar& other);
  SymScalar& operator-=(const SymScalar& other);
  SymScalar& operator*=(const Rat& c);
  /// Adds c * other without materializing the scaled copy.
  SymScalar& add_scaled(const Rat& c, const SymScalar& other);

  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
  friend SymScalar operator*(const Rat& c, SymScalar a) { return a *= c; }
  SymScalar operator-() const;

  friend bool operator==(const SymScalar& a, const SymScalar& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "3/2 + eta1 - 2*d_1_A"; "0" when zero.
  std::string str() const;

 private:
  void accumulate(const std::string& name, const Rat& value);
  Terms terms_;
};

SymScalar add(const SymScalar& a, const SymScalar& b);
SymScalar scale(const Rat& c, const SymScalar& a);
bool is_zero(const SymScalar& a);

/// Product of two scalars when at least one side is purely rational.
/// Throws SymbolicProduct otherwise.
SymScalar multiply(const SymScalar& a, const SymScalar& b);

std::ostream& operator<<(std::ostream& os, const SymScalar& s);

}  // namespace summa
