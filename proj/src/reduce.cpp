#include "summa/reduce.hpp"

#include <stdexcept>
#include <vector>

#include "summa/errors.hpp"

namespace summa {

namespace {

TermTable shift_table(const TermTable& table, std::int64_t k) {
  TermTable out;
  for (const auto& [key, c] : table) {
    out.emplace_hint(out.end(), TermKey{shift_point(key.point, k), key.order}, c);
  }
  return out;
}

// V with tau(V) - V = tau^n(h) - h:
//   n > 0:  V =  sum_{k=0}^{n-1} tau^k(h)
//   n < 0:  V = -sum_{k=n}^{-1}  tau^k(h)
TermTable telescope(const TermTable& h, std::int64_t n) {
  TermTable v;
  if (n > 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      for (const auto& [key, c] : shift_table(h, k)) accumulate(v, key, c);
    }
  } else {
    for (std::int64_t k = n; k < 0; ++k) {
      for (const auto& [key, c] : shift_table(h, k)) accumulate(v, key, -c);
    }
  }
  return v;
}

TermKey simple(const OrbitId& orbit, std::int64_t offset) { return TermKey{OrbitPoint{orbit, offset}, 1}; }

// Accumulates f + sum_i (tau(V_i) - V_i) together with the witness -sum_i V_i.
class Reducer {
 public:
  explicit Reducer(const TermTable& terms) : current_(terms) {}

  void apply(const TermTable& v) {
    if (!order_one_sum(v).is_zero()) {
      throw std::logic_error("reduction produced a non-elliptic witness increment");
    }
    SymScalar delta_balance;
    for (const auto& [key, c] : shift_table(v, 1)) {
      accumulate(current_, key, c);
      if (key.order == 1) delta_balance += c;
    }
    for (const auto& [key, c] : v) {
      accumulate(current_, key, -c);
      accumulate(witness_, key, -c);
      if (key.order == 1) delta_balance -= c;
    }
    balance_ += delta_balance;
    if (!balance_.is_zero()) throw std::logic_error("intermediate reduction lost ellipticity");
  }

  // Orders >= 2: move every coefficient onto the orbit representative.
  void gather_higher_orders() {
    std::vector<std::pair<TermKey, SymScalar>> pending;
    for (const auto& [key, c] : current_) {
      if (key.order >= 2 && key.point.offset != 0) pending.emplace_back(key, c);
    }
    for (const auto& [key, c] : pending) {
      apply(telescope(TermTable{{key, c}}, key.point.offset));
    }
  }

  // Simple poles off HAT: c zeta(z - q - n s) moves to c zeta(z - q), leaving
  // -c zeta(z) + c zeta(z - n s) behind on HAT.
  void gather_simple_off_anchor() {
    std::vector<std::pair<TermKey, SymScalar>> pending;
    for (const auto& [key, c] : current_) {
      if (key.order == 1 && !key.point.orbit.is_hat() && key.point.offset != 0) pending.emplace_back(key, c);
    }
    const OrbitId hat = OrbitId::hat();
    for (const auto& [key, c] : pending) {
      std::int64_t n = key.point.offset;
      TermTable h;
      accumulate(h, key, c);
      accumulate(h, simple(hat, n), -c);
      apply(telescope(h, n));
    }
  }

  // Simple poles on HAT: collect everything at offsets 0 and 1.
  void gather_simple_on_anchor() {
    const OrbitId hat = OrbitId::hat();
    std::vector<std::pair<std::int64_t, SymScalar>> pending;
    for (const auto& [key, c] : current_) {
      if (key.order == 1 && key.point.orbit.is_hat() && key.point.offset != 0 && key.point.offset != 1) {
        pending.emplace_back(key.point.offset, c);
      }
    }
    for (const auto& [n, c] : pending) {
      TermTable v;
      if (n >= 2) {
        // tau - Id of c * sum_{k=2}^{n} [zeta(z - k s) - zeta(z - s)]
        for (std::int64_t k = 2; k <= n; ++k) {
          accumulate(v, simple(hat, k), c);
          accumulate(v, simple(hat, 1), -c);
        }
      } else {
        // tau - Id of c * sum_{k=n}^{-1} [zeta(z - s) - zeta(z - (k+1) s)]
        for (std::int64_t k = n; k <= -1; ++k) {
          accumulate(v, simple(hat, 1), c);
          accumulate(v, simple(hat, k + 1), -c);
        }
      }
      apply(v);
    }
  }

  const TermTable& current() const { return current_; }
  const TermTable& witness() const { return witness_; }

 private:
  TermTable current_;
  TermTable witness_;
  SymScalar balance_;
};

bool in_canonical_position(const TermKey& key) {
  if (key.point.offset == 0) return true;
  return key.point.orbit.is_hat() && key.point.offset == 1 && key.order == 1;
}

}  // namespace

ReductionReport reduce(const ZetaExpansion& f) {
  Reducer reducer(f.terms());
  reducer.gather_higher_orders();
  reducer.gather_simple_off_anchor();
  reducer.gather_simple_on_anchor();

  for (const auto& [key, c] : reducer.current()) {
    if (!in_canonical_position(key)) throw std::logic_error("reduction left a pole outside the canonical support");
  }

  ReductionReport report;
  report.canonical = ZetaExpansion::make(f.constant(), reducer.current());
  report.witness = ZetaExpansion::make(SymScalar(), reducer.witness());
  report.summable = report.canonical.is_zero();
  report.ores = f.ores_table();
  report.pano0 = f.pano0();
  report.pano1 = f.pano1();
  return report;
}

SummabilityVerdict is_summable(const ZetaExpansion& f) {
  if (!f.ores_table().empty() || !f.pano0().is_zero() || !f.pano1().is_zero()) return {false, std::nullopt};
  ReductionReport report = reduce(f);
  if (!report.summable) throw std::logic_error("vanishing residues but nonzero canonical form");
  return {true, std::move(report.witness)};
}

bool almost_summable(const ZetaExpansion& f) { return f.ores_table().empty(); }

SymScalar quasi_period(std::int64_t b1, std::int64_t b2) {
  SymScalar eta = SymScalar::symbol(sym::eta1(), Rat(b1));
  eta += SymScalar::symbol(sym::eta2(), Rat(b2));
  return eta;
}

PanorbitalPair repin(const OresTable& ores, const SymScalar& pano0, const SymScalar& pano1,
                     const RepinDelta& delta) {
  if (delta.orbit.is_hat()) throw AnchorMove("re-pinning the anchor orbit HAT is not supported");
  auto it = ores.find(OresKey{delta.orbit, 1});
  SymScalar simple_residue = it == ores.end() ? SymScalar() : it->second;

  PanorbitalPair out{pano0, pano1};
  out.pano0 += multiply(quasi_period(delta.b1, delta.b2), simple_residue);
  out.pano1.add_scaled(Rat(-delta.k), simple_residue);
  return out;
}

// Old point q + n s equals q' + (n - k) s - lambda with q' = q + k s + lambda.
// Principal parts are lattice-invariant, so every coefficient moves to offset
// n - k; for order 1, zeta(z - q - n s) = zeta(z - q' - (n - k) s) + eta(lambda).
ZetaExpansion repin_expansion(const ZetaExpansion& f, const RepinDelta& delta) {
  if (delta.orbit.is_hat()) throw AnchorMove("re-pinning the anchor orbit HAT is not supported");
  const SymScalar eta = quasi_period(delta.b1, delta.b2);
  SymScalar constant = f.constant();
  TermTable terms;
  for (const auto& [key, c] : f.terms()) {
    if (key.point.orbit != delta.orbit) {
      accumulate(terms, key, c);
      continue;
    }
    accumulate(terms, TermKey{OrbitPoint{key.point.orbit, key.point.offset - delta.k}, key.order}, c);
    if (key.order == 1) constant += multiply(eta, c);
  }
  return ZetaExpansion::make(std::move(constant), std::move(terms));
}

}  // namespace summa
