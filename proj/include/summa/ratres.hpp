#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "summa/poly.hpp"
#include "summa/rat.hpp"

namespace summa {

enum class RatMode { Shift, Q };

struct PoleKey {
  Rat pole;
  int order = 1;

  friend bool operator==(const PoleKey&, const PoleKey&) = default;
  friend std::strong_ordering operator<=>(const PoleKey&, const PoleKey&) = default;
};

using LaurentPart = std::map<std::int64_t, Rat>;
using PrincipalPart = std::map<PoleKey, Rat>;

/// A rational function in partial-fraction form:
///   sum_k laurent[k] x^k + sum_{(a, j)} principal[(a, j)] / (x - a)^j.
///
/// No stored coefficient is zero. Shift mode keeps laurent degrees >= 0. Q
/// mode stores no pole at 0; those terms live in negative laurent degrees.
class RatPF {
 public:
  explicit RatPF(RatMode mode = RatMode::Shift) : mode_(mode) {}

  /// Validates and prunes; throws std::invalid_argument on a broken invariant.
  static RatPF make(RatMode mode, LaurentPart laurent, PrincipalPart principal);

  RatMode mode() const { return mode_; }
  const LaurentPart& laurent() const { return laurent_; }
  const PrincipalPart& principal() const { return principal_; }
  bool is_zero() const { return laurent_.empty() && principal_.empty(); }

  /// Throws std::domain_error at a pole.
  Rat evaluate(const Rat& x) const;

  RatPF& operator+=(const RatPF& other);
  RatPF& operator-=(const RatPF& other);
  friend RatPF operator+(RatPF a, const RatPF& b) { return a += b; }
  friend RatPF operator-(RatPF a, const RatPF& b) { return a -= b; }
  RatPF scale(const Rat& c) const;

  friend bool operator==(const RatPF&, const RatPF&) = default;

 private:
  void check_mode(const RatPF& other) const;

  RatMode mode_;
  LaurentPart laurent_;
  PrincipalPart principal_;
};

/// q with |q| != 1 and q != 0, so q is not a root of unity.
class QContext {
 public:
  /// Throws std::invalid_argument for q in {0, 1, -1}.
  explicit QContext(Rat q);
  const Rat& q() const { return q_; }

 private:
  Rat q_;
};

/// f(x + 1).
RatPF tau_shift(const RatPF& f);
/// f(q x).
RatPF tau_q(const RatPF& f, const QContext& ctx);

// ---- shift mode ------------------------------------------------------------

/// Sum of order-j coefficients over poles a with a - beta in Z.
Rat dres(const RatPF& f, const Rat& beta, int j);

/// Nonzero discrete residues keyed by (orbit representative in [0, 1), order).
std::map<PoleKey, Rat> dres_table(const RatPF& f);

struct RatVerdict {
  bool summable = false;
  /// Present iff summable; tau(witness) - witness == f.
  std::optional<RatPF> witness;
};

RatVerdict shift_summable(const RatPF& f);

/// The polynomial g with g(x + 1) - g(x) = p and g(0) = 0.
Poly polynomial_antidifference(const Poly& p);

// ---- q mode ----------------------------------------------------------------

/// l with x = q^l, or nullopt when x is not in q^Z. Exact; terminates because
/// |q| != 1.
std::optional<std::int64_t> q_exponent(const Rat& x, const QContext& ctx);

/// The unique r in q^Z a with 1 <= |r| < max(|q|, 1/|q|), and l with a = q^l r.
struct QOrbitPosition {
  Rat representative;
  std::int64_t exponent = 0;
};
QOrbitPosition q_orbit_position(const Rat& a, const QContext& ctx);

/// sum_l q^(-l j) c_j(f, q^l beta); beta != 0, j >= 1.
Rat qres(const RatPF& f, const QContext& ctx, const Rat& beta, int j);

/// Degree-0 Laurent coefficient.
Rat qres_inf(const RatPF& f);

/// Nonzero q-discrete residues keyed by (orbit representative, order).
std::map<PoleKey, Rat> qres_table(const RatPF& f, const QContext& ctx);

RatVerdict q_summable(const RatPF& f, const QContext& ctx);

// ---- partial fractions -------------------------------------------------------

/// Partial fractions of num / den. Throws UnsplitDenominator when den does
/// not split into linear factors over Q and std::domain_error for den == 0.
RatPF from_fraction(const Poly& num, const Poly& den, RatMode mode);

}  // namespace summa
