#include <numeric>

#include "doctest.h"
#include "generators.hpp"
#include "summa/errors.hpp"
#include "summa/linalg.hpp"
#include "summa/logdiff.hpp"

using namespace summa;
using summa::testing::Rng;

namespace {

const OrbitId A("A");
const OrbitId B("B");
const OrbitId HAT = OrbitId::hat();

DivisorData divisor(std::initializer_list<std::pair<OrbitPoint, std::int64_t>> entries) {
  std::map<OrbitPoint, std::int64_t> m;
  for (const auto& [p, k] : entries) m[p] += k;
  return DivisorData(m);
}

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// Divisor on orbits A, B with the given per-orbit multiplicity sums, spread
// over random offsets, balanced on HAT.
DivisorData with_residues(Rng& rng, std::int64_t a, std::int64_t b) {
  std::map<OrbitPoint, std::int64_t> m;
  auto spread = [&](const OrbitId& o, std::int64_t total) {
    std::int64_t part = summa::testing::uniform(rng, -3, 3);
    m[OrbitPoint{o, summa::testing::uniform(rng, -4, 4)}] += part;
    m[OrbitPoint{o, summa::testing::uniform(rng, -4, 4)}] += total - part;
  };
  spread(A, a);
  spread(B, b);
  m[OrbitPoint{HAT, summa::testing::uniform(rng, -4, 4)}] -= a + b;
  return DivisorData(m);
}

}  // namespace

TEST_CASE("logderiv examples") {
  ZetaExpansion f = logderiv(divisor({{{A, 0}, 2}, {{B, 0}, -2}}));
  CHECK(f.coefficient(OrbitPoint{A, 0}, 1) == SymScalar(2));
  CHECK(f.coefficient(OrbitPoint{B, 0}, 1) == SymScalar(-2));
  CHECK(f.terms().size() == 2);
  CHECK(f.constant() == SymScalar::symbol("eta_b"));
  CHECK(logderiv(divisor({{{A, 0}, 1}, {{A, 2}, -1}})).pano1() == SymScalar(-2));
  CHECK(logderiv(divisor({{{A, 0}, 1}, {{B, 1}, -1}}), "7").constant() == SymScalar::symbol("eta_b_7"));
  CHECK_THROWS_AS(logderiv(divisor({{{A, 0}, 1}})), DegreeViolation);
}

TEST_CASE("logderiv residues are multiplicity sums") {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    DivisorData d = summa::testing::random_divisor(rng);
    ZetaExpansion f = logderiv(d);
    std::map<OrbitId, std::int64_t> sums;
    for (const auto& [p, m] : d.entries()) sums[p.orbit] += m;
    for (const auto& [o, s] : sums) CHECK(f.ores(o, 1) == SymScalar(Rat(static_cast<long>(s))));
  }
}

TEST_CASE("nullspace and primitive vectors") {
  RatMatrix m{{Rat(2), Rat(3)}, {Rat(-2), Rat(-3)}};
  auto basis = nullspace(m, 2);
  REQUIRE(basis.size() == 1);
  CHECK(as_longs(primitive_integer_vector(basis[0])) == std::vector<long>{3, -2});
  CHECK(nullspace({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2).empty());
  CHECK(nullspace({}, 3).size() == 3);
  CHECK(as_longs(primitive_integer_vector({Rat(0), Rat(mpz_class(-2), mpz_class(3)), Rat(4)})) ==
        std::vector<long>{0, 1, -6});
  CHECK_THROWS_AS(primitive_integer_vector({Rat(0)}), std::invalid_argument);
}

TEST_CASE("diffdep examples") {
  auto ell = diffdep({divisor({{{A, 0}, 2}, {{B, 0}, -2}}), divisor({{{A, 1}, 3}, {{B, 5}, -3}})});
  REQUIRE(ell);
  CHECK(as_longs(*ell) == std::vector<long>{3, -2});
  CHECK_FALSE(diffdep({divisor({{{A, 0}, 1}, {{HAT, 0}, -1}}), divisor({{{B, 0}, 1}, {{HAT, 0}, -1}})}));
  // zero residues on every orbit
  auto zero = diffdep({divisor({{{A, 0}, 1}, {{A, 3}, -1}})});
  REQUIRE(zero);
  CHECK(as_longs(*zero) == std::vector<long>{1});
  CHECK_FALSE(diffdep({}));
}

TEST_CASE("diffdep output annihilates the residue matrix") {
  Rng rng(52);
  int dependent = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<DivisorData> ds;
    for (int k = 0; k < summa::testing::uniform(rng, 1, 4); ++k) ds.push_back(summa::testing::random_divisor(rng, 4));
    auto ell = diffdep(ds);
    ResidueMatrix m = residue_matrix(ds);
    if (!ell) continue;
    ++dependent;
    mpz_class g = 0;
    bool nonzero = false;
    for (const auto& x : *ell) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      nonzero = nonzero || x != 0;
    }
    CHECK(nonzero);
    CHECK(g == 1);
    for (const auto& row : m.rows) {
      mpz_class total = 0;
      for (std::size_t c = 0; c < row.size(); ++c) total += (*ell)[c] * row[c];
      CHECK(total == 0);
    }
    CHECK(combination_summable(ds, *ell).summable);
  }
  CHECK(dependent > 0);
}

TEST_CASE("constructed dependent triples") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    std::int64_t a1 = summa::testing::uniform(rng, -4, 4), b1 = summa::testing::uniform(rng, -4, 4);
    std::int64_t a2 = summa::testing::uniform(rng, -4, 4), b2 = summa::testing::uniform(rng, -4, 4);
    std::int64_t x = summa::testing::uniform(rng, -3, 3), y = summa::testing::uniform(rng, -3, 3);
    std::vector<DivisorData> ds{with_residues(rng, a1, b1), with_residues(rng, a2, b2),
                                with_residues(rng, x * a1 + y * a2, x * b1 + y * b2)};
    auto ell = diffdep(ds);
    REQUIRE(ell);
    ResidueMatrix m = residue_matrix(ds);
    for (const auto& row : m.rows) {
      mpz_class total = 0;
      for (std::size_t c = 0; c < row.size(); ++c) total += (*ell)[c] * row[c];
      CHECK(total == 0);
    }
  }
}

TEST_CASE("order_reduction_check examples") {
  DivisorData d = divisor({{{A, 0}, 2}, {{B, 0}, -2}});
  CHECK(order_reduction_check(d, 2));
  CHECK(logderiv(d).derive().derive().ores(A, 3) == SymScalar(4));
  CHECK(order_reduction_check(d, 0));
  CHECK_THROWS_AS(order_reduction_check(d, 9), std::invalid_argument);
  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    DivisorData rd = summa::testing::random_divisor(rng);
    for (int r = 0; r <= 8; ++r) CHECK(order_reduction_check(rd, r));
  }
}
