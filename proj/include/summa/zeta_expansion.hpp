#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "summa/rat.hpp"
#include "summa/sym_scalar.hpp"
#include "summa/torus.hpp"

namespace summa {

/// Index of one zeta-expansion coefficient: the pole q_omega + n s and the
/// order j >= 1. Ordered by (orbit, n, j).
struct TermKey {
  OrbitPoint point;
  int order = 1;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend std::strong_ordering operator<=>(const TermKey&, const TermKey&) = default;
};

/// Index of an orbital residue.
struct OresKey {
  OrbitId orbit;
  int order = 1;

  friend bool operator==(const OresKey&, const OresKey&) = default;
  friend std::strong_ordering operator<=>(const OresKey&, const OresKey&) = default;
};

using TermTable = std::map<TermKey, SymScalar>;
using OresTable = std::map<OresKey, SymScalar>;

/// Adds `value` at `key`, erasing the entry if it cancels to zero.
void accumulate(TermTable& table, const TermKey& key, const SymScalar& value);

/// Sum of all order-1 coefficients; zero exactly when the table is elliptic.
SymScalar order_one_sum(const TermTable& table);

/// An elliptic function in pinned zeta-expansion form
///
///   f(z) = C + sum_{(p, j)} c_j(p) (-1)^{j-1} / (j-1)! * zeta^{(j-1)}(z - p),
///
/// where the stored number is the normalized coefficient c_j(p), i.e. the
/// order-j coefficient of the principal part of f at p. Weierstrass wp(z - p)
/// is the single entry (p, 2) -> 1.
///
/// Invariant: the order-1 coefficients sum to zero. Every way of building a
/// ZetaExpansion checks or preserves it.
class ZetaExpansion {
 public:
  ZetaExpansion() = default;

  /// Validates orders and ellipticity; drops zero entries.
  /// Throws EllipticityViolation or std::invalid_argument (order < 1).
  static ZetaExpansion make(SymScalar constant, TermTable terms);
  static ZetaExpansion constant_function(SymScalar constant);
  /// wp(z - p).
  static ZetaExpansion wp(const OrbitPoint& p = {});

  const SymScalar& constant() const { return constant_; }
  const TermTable& terms() const { return terms_; }
  SymScalar coefficient(const OrbitPoint& p, int order) const;

  bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
  bool has_poles() const { return !terms_.empty(); }
  std::set<OrbitId> orbits() const;
  /// Highest order with a stored coefficient at p (0 when p is not a pole).
  int pole_order(const OrbitPoint& p) const;

  /// k-fold application of tau: f(z) -> f(z + k s). The coefficient at
  /// offset n of the result is the coefficient at offset n + k of f.
  ZetaExpansion tau(std::int64_t k) const;
  /// d/dz. Uses zeta' = -wp, hence c_{j+1}(f') = -j c_j(f).
  ZetaExpansion derive() const;

  /// Sum over the orbit of the order-j coefficients.
  SymScalar ores(const OrbitId& orbit, int order) const;
  /// All nonzero orbital residues.
  OresTable ores_table() const;
  /// The constant term of the pinned expansion.
  SymScalar pano0() const { return constant_; }
  /// sum over all order-1 entries of n * c_1.
  SymScalar pano1() const;

  /// Largest n with poles p and p + n s; nullopt for a constant function.
  std::optional<std::int64_t> pdisp() const;
  /// As pdisp, restricted to poles of order >= 2.
  std::optional<std::int64_t> wpdisp() const;

  ZetaExpansion& operator+=(const ZetaExpansion& other);
  ZetaExpansion& operator-=(const ZetaExpansion& other);
  friend ZetaExpansion operator+(ZetaExpansion a, const ZetaExpansion& b) { return a += b; }
  friend ZetaExpansion operator-(ZetaExpansion a, const ZetaExpansion& b) { return a -= b; }
  ZetaExpansion operator-() const;
  ZetaExpansion scale(const Rat& c) const;

  friend bool operator==(const ZetaExpansion&, const ZetaExpansion&) = default;

 private:
  ZetaExpansion(SymScalar constant, TermTable terms)
      : constant_(std::move(constant)), terms_(std::move(terms)) {}

  std::optional<std::int64_t> dispersion(int min_order) const;

  SymScalar constant_;
  TermTable terms_;
};

}  // namespace summa
