#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace summa {

inline constexpr std::string_view kHatLabel = "HAT";

/// Label of an orbit of the torus modulo the lattice and the shift. "HAT" is
/// the orbit of 0, whose pinned representative is the point 0 itself.
class OrbitId {
 public:
  OrbitId() : label_(kHatLabel) {}
  explicit OrbitId(std::string label);

  static OrbitId hat() { return OrbitId(); }
  static bool is_valid_label(std::string_view label);

  const std::string& label() const { return label_; }
  bool is_hat() const { return label_ == kHatLabel; }

  friend bool operator==(const OrbitId&, const OrbitId&) = default;
  friend std::strong_ordering operator<=>(const OrbitId& a, const OrbitId& b) {
    return a.label_.compare(b.label_) <=> 0;
  }

 private:
  std::string label_;
};

/// The point q_omega + offset * s. Points on distinct orbits never coincide.
struct OrbitPoint {
  OrbitId orbit;
  std::int64_t offset = 0;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
  friend std::strong_ordering operator<=>(const OrbitPoint&, const OrbitPoint&) = default;
};

/// Where a pole at p ends up after k applications of tau to its function:
/// each application moves the pole by -s, so the offset drops by k.
OrbitPoint shift_point(const OrbitPoint& p, std::int64_t k);

/// One representative per orbit; the anchor orbit HAT is always present.
class Pinning {
 public:
  Pinning() { orbits_.insert(OrbitId::hat()); }

  void add(const OrbitId& orbit) { orbits_.insert(orbit); }
  bool contains(const OrbitId& orbit) const { return orbits_.contains(orbit); }
  const std::set<OrbitId>& orbits() const { return orbits_; }

 private:
  std::set<OrbitId> orbits_;
};

std::ostream& operator<<(std::ostream& os, const OrbitId& id);
std::ostream& operator<<(std::ostream& os, const OrbitPoint& p);

}  // namespace summa
