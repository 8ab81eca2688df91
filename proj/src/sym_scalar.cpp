#include "summa/sym_scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "summa/errors.hpp"

namespace summa {

namespace sym {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string eta1() { return "eta1"; }
std::string eta2() { return "eta2"; }
std::string fhat() { return "fhat"; }

std::string eta_b(std::string_view tag) {
  if (tag.empty()) return "eta_b";
  return "eta_b_" + std::string(tag);
}

std::string d(int order, std::string_view orbit_label) {
  return "d_" + std::to_string(order) + "_" + std::string(orbit_label);
}

std::string phi(std::string_view orbit_label, int order, std::int64_t offset) {
  return "phi_" + std::string(orbit_label) + "_" + std::to_string(order) + "@" + std::to_string(offset);
}

std::string psi(int order) { return "psi_" + std::to_string(order); }

std::string Psi(std::int64_t offset) { return "Psi_" + std::to_string(offset); }

namespace {

bool is_atom(std::string_view name) {
  auto at = name.find('@');
  std::string_view ident = name.substr(0, at);
  if (ident.empty() || !is_alpha(ident.front())) return false;
  for (char c : ident) {
    if (!is_alnum(c) && c != '_') return false;
  }
  if (at != std::string_view::npos) {
    std::string_view digits = name.substr(at + 1);
    if (digits.empty()) return false;
    for (char c : digits) {
      if (!is_digit(c)) return false;
    }
  }
  return true;
}

}  // namespace

std::string product(std::string_view a, std::string_view b) {
  if (!is_atom(a) || !is_atom(b)) throw std::invalid_argument("monomial factors must be atomic symbols");
  if (b < a) std::swap(a, b);
  return std::string(a) + "*" + std::string(b);
}

bool is_valid(std::string_view name) {
  if (name == kUnit) return true;
  auto star = name.find('*');
  if (star == std::string_view::npos) return is_atom(name);
  std::string_view a = name.substr(0, star);
  std::string_view b = name.substr(star + 1);
  return is_atom(a) && is_atom(b) && a <= b;
}

}  // namespace sym

SymScalar::SymScalar(const Rat& value) {
  if (!value.is_zero()) terms_.emplace(std::string(sym::kUnit), value);
}

SymScalar SymScalar::symbol(std::string name, const Rat& coeff) {
  if (!sym::is_valid(name)) throw std::invalid_argument("invalid symbol name '" + name + "'");
  SymScalar out;
  out.accumulate(name, coeff);
  return out;
}

Rat SymScalar::coeff(std::string_view name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rat() : it->second;
}

bool SymScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == sym::kUnit);
}

std::optional<Rat> SymScalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeff(sym::kUnit);
}

void SymScalar::accumulate(const std::string& name, const Rat& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(name, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

SymScalar& SymScalar::operator+=(const SymScalar& other) {
  for (const auto& [name, value] : other.terms_) accumulate(name, value);
  return *this;
}

SymScalar& SymScalar::operator-=(const SymScalar& other) {
  for (const auto& [name, value] : other.terms_) accumulate(name, -value);
  return *this;
}

SymScalar& SymScalar::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [name, value] : terms_) value *= c;
  return *this;
}

SymScalar& SymScalar::add_scaled(const Rat& c, const SymScalar& other) {
  if (c.is_zero()) return *this;
  for (const auto& [name, value] : other.terms_) accumulate(name, c * value);
  return *this;
}

SymScalar SymScalar::operator-() const {
  SymScalar out = *this;
  for (auto& [name, value] : out.terms_) value = -value;
  return out;
}

std::string SymScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [name, value] : terms_) {
    Rat magnitude = value.abs();
    if (first) {
      if (value.sign() < 0) out += "-";
    } else {
      out += value.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (name == sym::kUnit) {
      out += magnitude.str();
    } else if (magnitude == Rat(1)) {
      out += name;
    } else {
      out += magnitude.str() + "*" + name;
    }
  }
  return out;
}

SymScalar add(const SymScalar& a, const SymScalar& b) { return a + b; }

SymScalar scale(const Rat& c, const SymScalar& a) { return c * a; }

bool is_zero(const SymScalar& a) { return a.is_zero(); }

SymScalar multiply(const SymScalar& a, const SymScalar& b) {
  if (auto r = a.as_rational()) return *r * b;
  if (auto r = b.as_rational()) return *r * a;
  throw SymbolicProduct("product of two symbolic scalars (" + a.str() + ") * (" + b.str() + ")");
}

std::ostream& operator<<(std::ostream& os, const SymScalar& s) { return os << s.str(); }

}  // namespace summa
