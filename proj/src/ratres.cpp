#include "summa/ratres.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "summa/errors.hpp"

namespace summa {

namespace {

template <typename Map, typename Key>
void accumulate(Map& map, const Key& key, const Rat& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) map.erase(it);
  }
}

Poly laurent_polynomial(const LaurentPart& laurent) {
  std::vector<Rat> coeffs;
  for (const auto& [k, c] : laurent) {
    if (k < 0) throw std::logic_error("negative degree in a shift-mode Laurent part");
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] = c;
  }
  return Poly(std::move(coeffs));
}

LaurentPart from_polynomial(const Poly& p) {
  LaurentPart out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) accumulate(out, static_cast<std::int64_t>(k), p.coeffs()[k]);
  return out;
}

std::int64_t checked_offset(const mpz_class& n) { return Rat(n).to_int64(); }

// Per group, coefficients keyed by orbit position; -sum_{m >= n} f_m fills every
// position in [min, max]. Returns the tail total, which must be zero for a
// finitely supported solution.
Rat tail_sums(const std::map<std::int64_t, Rat>& f, std::map<std::int64_t, Rat>& g) {
  Rat tail;
  if (f.empty()) return tail;
  std::int64_t lo = f.begin()->first;
  std::int64_t hi = f.rbegin()->first;
  for (std::int64_t n = hi; n >= lo; --n) {
    auto it = f.find(n);
    if (it != f.end()) tail += it->second;
    if (!tail.is_zero()) g[n] = -tail;
  }
  return tail;
}

}  // namespace

RatPF RatPF::make(RatMode mode, LaurentPart laurent, PrincipalPart principal) {
  RatPF out(mode);
  for (const auto& [k, c] : laurent) {
    if (mode == RatMode::Shift && k < 0) throw std::invalid_argument("negative Laurent degree in shift mode");
    accumulate(out.laurent_, k, c);
  }
  for (const auto& [key, c] : principal) {
    if (key.order < 1) throw std::invalid_argument("pole order must be >= 1");
    if (mode == RatMode::Q && key.pole.is_zero()) {
      accumulate(out.laurent_, -static_cast<std::int64_t>(key.order), c);
      continue;
    }
    accumulate(out.principal_, key, c);
  }
  return out;
}

Rat RatPF::evaluate(const Rat& x) const {
  Rat acc;
  for (const auto& [k, c] : laurent_) {
    if (k < 0 && x.is_zero()) throw std::domain_error("evaluation at the pole 0");
    acc += c * x.pow(k);
  }
  for (const auto& [key, c] : principal_) {
    Rat base = x - key.pole;
    if (base.is_zero()) throw std::domain_error("evaluation at a pole");
    acc += c * base.pow(-static_cast<long>(key.order));
  }
  return acc;
}

void RatPF::check_mode(const RatPF& other) const {
  if (mode_ != other.mode_) throw std::invalid_argument("mixing shift-mode and q-mode functions");
}

RatPF& RatPF::operator+=(const RatPF& other) {
  check_mode(other);
  for (const auto& [k, c] : other.laurent_) accumulate(laurent_, k, c);
  for (const auto& [key, c] : other.principal_) accumulate(principal_, key, c);
  return *this;
}

RatPF& RatPF::operator-=(const RatPF& other) {
  check_mode(other);
  for (const auto& [k, c] : other.laurent_) accumulate(laurent_, k, -c);
  for (const auto& [key, c] : other.principal_) accumulate(principal_, key, -c);
  return *this;
}

RatPF RatPF::scale(const Rat& c) const {
  RatPF out(mode_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : laurent_) out.laurent_.emplace(k, v * c);
  for (const auto& [key, v] : principal_) out.principal_.emplace(key, v * c);
  return out;
}

QContext::QContext(Rat q) : q_(std::move(q)) {
  if (q_.is_zero() || q_.abs() == Rat(1)) throw std::invalid_argument("q must satisfy |q| != 1 and q != 0");
}

RatPF tau_shift(const RatPF& f) {
  if (f.mode() != RatMode::Shift) throw std::invalid_argument("tau_shift needs a shift-mode function");
  PrincipalPart principal;
  for (const auto& [key, c] : f.principal()) principal.emplace(PoleKey{key.pole - Rat(1), key.order}, c);
  return RatPF::make(RatMode::Shift, from_polynomial(laurent_polynomial(f.laurent()).taylor_shift(Rat(1))),
                     std::move(principal));
}

RatPF tau_q(const RatPF& f, const QContext& ctx) {
  if (f.mode() != RatMode::Q) throw std::invalid_argument("tau_q needs a q-mode function");
  const Rat& q = ctx.q();
  LaurentPart laurent;
  for (const auto& [k, c] : f.laurent()) laurent.emplace(k, c * q.pow(k));
  // c / (q x - a)^j = c q^{-j} / (x - a/q)^j
  PrincipalPart principal;
  for (const auto& [key, c] : f.principal()) {
    principal.emplace(PoleKey{key.pole / q, key.order}, c * q.pow(-static_cast<long>(key.order)));
  }
  return RatPF::make(RatMode::Q, std::move(laurent), std::move(principal));
}

Rat dres(const RatPF& f, const Rat& beta, int j) {
  Rat acc;
  for (const auto& [key, c] : f.principal()) {
    if (key.order == j && (key.pole - beta).is_integer()) acc += c;
  }
  return acc;
}

std::map<PoleKey, Rat> dres_table(const RatPF& f) {
  std::map<PoleKey, Rat> out;
  for (const auto& [key, c] : f.principal()) {
    accumulate(out, PoleKey{key.pole - Rat(floor(key.pole)), key.order}, c);
  }
  return out;
}

Poly polynomial_antidifference(const Poly& p) {
  if (p.is_zero()) return Poly();
  // g = sum_k b_k x^k; the x^i coefficient of g(x+1) - g(x) is
  // sum_{k > i} C(k, i) b_k. Triangular, solved from the top degree down.
  const long d = p.degree();
  std::vector<Rat> b(static_cast<std::size_t>(d + 2));
  for (long i = d; i >= 0; --i) {
    Rat rhs = p.coeff(static_cast<std::size_t>(i));
    for (long k = i + 2; k <= d + 1; ++k) rhs -= binomial(k, i) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i + 1)] = rhs / Rat(i + 1);
  }
  return Poly(std::move(b));
}

RatVerdict shift_summable(const RatPF& f) {
  if (f.mode() != RatMode::Shift) throw std::invalid_argument("shift_summable needs a shift-mode function");
  std::map<PoleKey, std::map<std::int64_t, Rat>> groups;
  for (const auto& [key, c] : f.principal()) {
    mpz_class n = floor(key.pole);
    groups[PoleKey{key.pole - Rat(n), key.order}][checked_offset(n)] = c;
  }

  PrincipalPart witness;
  for (const auto& [group, coeffs] : groups) {
    std::map<std::int64_t, Rat> g;
    if (!tail_sums(coeffs, g).is_zero()) return {false, std::nullopt};
    for (const auto& [n, c] : g) witness.emplace(PoleKey{group.pole + Rat(n), group.order}, c);
  }
  RatPF w = RatPF::make(RatMode::Shift,
                        from_polynomial(polynomial_antidifference(laurent_polynomial(f.laurent()))),
                        std::move(witness));
  if (tau_shift(w) - w != f) throw std::logic_error("shift witness does not telescope to the input");
  return {true, std::move(w)};
}

std::optional<std::int64_t> q_exponent(const Rat& x, const QContext& ctx) {
  if (x.is_zero()) return std::nullopt;
  const bool invert = ctx.q().abs() < Rat(1);
  const Rat big = invert ? ctx.q().inverse() : ctx.q();
  const Rat one(1);
  Rat y = x;
  std::int64_t l = 0;
  // |big| > 1, so each step moves |y| monotonically toward 1 and overshoots it
  // at most once.
  while (y.abs() > one) {
    y /= big;
    ++l;
  }
  while (y.abs() < one) {
    y *= big;
    --l;
  }
  if (y != one) return std::nullopt;
  return invert ? -l : l;
}

QOrbitPosition q_orbit_position(const Rat& a, const QContext& ctx) {
  if (a.is_zero()) throw std::invalid_argument("0 has no q-orbit");
  const bool invert = ctx.q().abs() < Rat(1);
  const Rat big = invert ? ctx.q().inverse() : ctx.q();
  const Rat one(1);
  const Rat bound = big.abs();
  Rat r = a;
  std::int64_t l = 0;
  while (r.abs() >= bound) {
    r /= big;
    ++l;
  }
  while (r.abs() < one) {
    r *= big;
    --l;
  }
  return {r, invert ? -l : l};
}

Rat qres(const RatPF& f, const QContext& ctx, const Rat& beta, int j) {
  if (beta.is_zero()) throw std::invalid_argument("qres needs beta != 0");
  Rat acc;
  for (const auto& [key, c] : f.principal()) {
    if (key.order != j) continue;
    auto l = q_exponent(key.pole / beta, ctx);
    if (l) acc += ctx.q().pow(-*l * j) * c;
  }
  return acc;
}

Rat qres_inf(const RatPF& f) {
  auto it = f.laurent().find(0);
  return it == f.laurent().end() ? Rat() : it->second;
}

std::map<PoleKey, Rat> qres_table(const RatPF& f, const QContext& ctx) {
  std::map<PoleKey, Rat> out;
  for (const auto& [key, c] : f.principal()) {
    QOrbitPosition pos = q_orbit_position(key.pole, ctx);
    accumulate(out, PoleKey{pos.representative, key.order}, ctx.q().pow(-pos.exponent * key.order) * c);
  }
  return out;
}

RatVerdict q_summable(const RatPF& f, const QContext& ctx) {
  if (f.mode() != RatMode::Q) throw std::invalid_argument("q_summable needs a q-mode function");
  if (!qres_inf(f).is_zero()) return {false, std::nullopt};
  const Rat& q = ctx.q();

  // With G_l = q^{-l j} g_l and F_l = q^{-l j} f_l the relation reads
  // F_l = G_{l+1} - G_l along each orbit.
  std::map<PoleKey, std::map<std::int64_t, Rat>> groups;
  for (const auto& [key, c] : f.principal()) {
    QOrbitPosition pos = q_orbit_position(key.pole, ctx);
    groups[PoleKey{pos.representative, key.order}][pos.exponent] = q.pow(-pos.exponent * key.order) * c;
  }
  PrincipalPart witness;
  for (const auto& [group, weighted] : groups) {
    std::map<std::int64_t, Rat> g;
    if (!tail_sums(weighted, g).is_zero()) return {false, std::nullopt};
    for (const auto& [l, c] : g) {
      witness.emplace(PoleKey{q.pow(l) * group.pole, group.order}, q.pow(l * group.order) * c);
    }
  }
  LaurentPart laurent;
  for (const auto& [k, c] : f.laurent()) laurent.emplace(k, c / (q.pow(k) - Rat(1)));

  RatPF w = RatPF::make(RatMode::Q, std::move(laurent), std::move(witness));
  if (tau_q(w, ctx) - w != f) throw std::logic_error("q witness does not telescope to the input");
  return {true, std::move(w)};
}

RatPF from_fraction(const Poly& num, const Poly& den, RatMode mode) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  PolyDivision qr = divide(num, den);
  RationalRoots split = rational_roots(den);
  if (split.cofactor.degree() > 0) {
    throw UnsplitDenominator("denominator has a factor of degree " + std::to_string(split.cofactor.degree()) +
                             " without rational roots");
  }
  const Rat lead = split.cofactor.coeff(0);

  PrincipalPart principal;
  const Poly x(std::vector<Rat>{Rat(0), Rat(1)});
  for (const auto& [root, mult] : split.roots) {
    // h = rem / (lead * prod_{b != root} (x - b)^m_b), expanded at x = root + t.
    Poly others(std::vector<Rat>{lead});
    for (const auto& [b, m] : split.roots) {
      if (b == root) continue;
      for (int i = 0; i < m; ++i) others = others * (x - Poly(std::vector<Rat>{b}));
    }
    std::vector<Rat> h = series_quotient(qr.remainder.taylor_shift(root), others.taylor_shift(root),
                                         static_cast<std::size_t>(mult));
    for (int i = 0; i < mult; ++i) principal.emplace(PoleKey{root, mult - i}, h[static_cast<std::size_t>(i)]);
  }
  return RatPF::make(mode, from_polynomial(qr.quotient), std::move(principal));
}

}  // namespace summa
