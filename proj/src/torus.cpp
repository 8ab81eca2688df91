#include "summa/torus.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace summa {

OrbitId::OrbitId(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) throw std::invalid_argument("invalid orbit label '" + label_ + "'");
}

bool OrbitId::is_valid_label(std::string_view label) {
  if (label.empty() || !std::isalpha(static_cast<unsigned char>(label.front()))) return false;
  for (char c : label) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

OrbitPoint shift_point(const OrbitPoint& p, std::int64_t k) { return {p.orbit, p.offset - k}; }

std::ostream& operator<<(std::ostream& os, const OrbitId& id) { return os << id.label(); }

std::ostream& operator<<(std::ostream& os, const OrbitPoint& p) {
  return os << "(" << p.orbit << "," << p.offset << ")";
}

}  // namespace summa
