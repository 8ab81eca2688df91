#include "summa/zeta_expansion.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "summa/errors.hpp"

namespace summa {

void accumulate(TermTable& table, const TermKey& key, const SymScalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = table.try_emplace(key, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) table.erase(it);
}

SymScalar order_one_sum(const TermTable& table) {
  SymScalar sum;
  for (const auto& [key, c] : table) {
    if (key.order == 1) sum += c;
  }
  return sum;
}

ZetaExpansion ZetaExpansion::make(SymScalar constant, TermTable terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.order < 1) {
      throw std::invalid_argument("zeta-expansion term with order " + std::to_string(it->first.order) + " < 1");
    }
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  SymScalar balance = order_one_sum(terms);
  if (!balance.is_zero()) {
    throw EllipticityViolation("order-1 coefficients sum to " + balance.str() +
                               ", not 0; the data is not an elliptic function");
  }
  return ZetaExpansion(std::move(constant), std::move(terms));
}

ZetaExpansion ZetaExpansion::constant_function(SymScalar constant) {
  return ZetaExpansion(std::move(constant), {});
}

ZetaExpansion ZetaExpansion::wp(const OrbitPoint& p) {
  return ZetaExpansion(SymScalar(), TermTable{{TermKey{p, 2}, SymScalar(1)}});
}

SymScalar ZetaExpansion::coefficient(const OrbitPoint& p, int order) const {
  auto it = terms_.find(TermKey{p, order});
  return it == terms_.end() ? SymScalar() : it->second;
}

std::set<OrbitId> ZetaExpansion::orbits() const {
  std::set<OrbitId> out;
  for (const auto& [key, c] : terms_) out.insert(key.point.orbit);
  return out;
}

int ZetaExpansion::pole_order(const OrbitPoint& p) const {
  int order = 0;
  for (auto it = terms_.lower_bound(TermKey{p, 0}); it != terms_.end() && it->first.point == p; ++it) {
    order = std::max(order, it->first.order);
  }
  return order;
}

ZetaExpansion ZetaExpansion::tau(std::int64_t k) const {
  if (k == 0) return *this;
  TermTable out;
  for (const auto& [key, c] : terms_) {
    out.emplace_hint(out.end(), TermKey{shift_point(key.point, k), key.order}, c);
  }
  return ZetaExpansion(constant_, std::move(out));
}

ZetaExpansion ZetaExpansion::derive() const {
  TermTable out;
  for (const auto& [key, c] : terms_) {
    out.emplace(TermKey{key.point, key.order + 1}, Rat(-key.order) * c);
  }
  return ZetaExpansion(SymScalar(), std::move(out));
}

SymScalar ZetaExpansion::ores(const OrbitId& orbit, int order) const {
  if (order < 1) throw std::invalid_argument("orbital residue order must be >= 1");
  SymScalar sum;
  for (auto it = terms_.lower_bound(TermKey{OrbitPoint{orbit, std::numeric_limits<std::int64_t>::min()}, 0});
       it != terms_.end() && it->first.point.orbit == orbit; ++it) {
    if (it->first.order == order) sum += it->second;
  }
  return sum;
}

OresTable ZetaExpansion::ores_table() const {
  OresTable table;
  for (const auto& [key, c] : terms_) {
    auto [it, inserted] = table.try_emplace(OresKey{key.point.orbit, key.order}, c);
    if (!inserted) it->second += c;
  }
  std::erase_if(table, [](const auto& entry) { return entry.second.is_zero(); });
  return table;
}

SymScalar ZetaExpansion::pano1() const {
  SymScalar sum;
  for (const auto& [key, c] : terms_) {
    if (key.order == 1 && key.point.offset != 0) sum.add_scaled(Rat(key.point.offset), c);
  }
  return sum;
}

std::optional<std::int64_t> ZetaExpansion::dispersion(int min_order) const {
  std::map<OrbitId, std::pair<std::int64_t, std::int64_t>> span;
  for (const auto& [key, c] : terms_) {
    if (key.order < min_order) continue;
    auto [it, inserted] = span.try_emplace(key.point.orbit, key.point.offset, key.point.offset);
    if (!inserted) {
      it->second.first = std::min(it->second.first, key.point.offset);
      it->second.second = std::max(it->second.second, key.point.offset);
    }
  }
  std::optional<std::int64_t> best;
  for (const auto& [orbit, range] : span) {
    std::int64_t width = range.second - range.first;
    if (!best || width > *best) best = width;
  }
  return best;
}

std::optional<std::int64_t> ZetaExpansion::pdisp() const { return dispersion(1); }

// A pole has order >= 2 exactly when some stored entry at it has j >= 2.
std::optional<std::int64_t> ZetaExpansion::wpdisp() const { return dispersion(2); }

ZetaExpansion& ZetaExpansion::operator+=(const ZetaExpansion& other) {
  constant_ += other.constant_;
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, c);
  return *this;
}

ZetaExpansion& ZetaExpansion::operator-=(const ZetaExpansion& other) {
  constant_ -= other.constant_;
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, -c);
  return *this;
}

ZetaExpansion ZetaExpansion::operator-() const { return scale(Rat(-1)); }

ZetaExpansion ZetaExpansion::scale(const Rat& c) const {
  if (c.is_zero()) return ZetaExpansion();
  ZetaExpansion out = *this;
  out.constant_ *= c;
  for (auto& [key, value] : out.terms_) value *= c;
  return out;
}

}  // namespace summa
