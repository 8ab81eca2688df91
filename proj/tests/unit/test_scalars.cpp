#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "summa/errors.hpp"
#include "summa/sym_scalar.hpp"

using namespace summa;
using summa::testing::Rng;

namespace {

SymScalar named(const char* name, const Rat& c) { return SymScalar::symbol(name, c); }

bool lowest_terms(const Rat& r) {
  mpz_class g;
  mpz_class n = r.num();
  mpz_class d = r.den();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && g == 1;
}

bool no_zero_entries(const SymScalar& s) {
  for (const auto& [name, c] : s.terms()) {
    if (c.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals are normalized") {
  CHECK(Rat(mpz_class(6), mpz_class(-4)).str() == "-3/2");
  CHECK(Rat(mpz_class(0), mpz_class(-7)).str() == "0");
  CHECK(Rat(mpz_class(0), mpz_class(5)).den() == 1);
  CHECK_THROWS_AS(Rat(mpz_class(1), mpz_class(0)), std::domain_error);
}

TEST_CASE("rational literals") {
  CHECK(Rat::parse("3/4") == Rat(mpz_class(3), mpz_class(4)));
  CHECK(Rat::parse("-10/4").str() == "-5/2");
  CHECK(Rat::parse("+7") == Rat(7));
  CHECK(Rat::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "/", "1/", "/2", "1/-2", "1.5", "a", "1/0", "--1", "1 /2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rat a = summa::testing::random_rat(rng, 50, 30);
    Rat b = summa::testing::random_nonzero_rat(rng, 50, 30);
    for (const Rat& r : {a + b, a - b, a * b, a / b, -a, a.abs(), b.inverse(), b.pow(-3)}) {
      CHECK(lowest_terms(r));
    }
    CHECK(a * b / b == a);
    CHECK(floor(a) <= a.get_mpq());
    CHECK(Rat(floor(a)) + Rat(1) > a);
  }
}

TEST_CASE("add examples") {
  CHECK(add(SymScalar(2), SymScalar(3)) == SymScalar(5));
  CHECK(add(named("eta1", 1), named("eta1", -1)).is_zero());
  SymScalar a = SymScalar(Rat(mpz_class(1), mpz_class(2))) + named("eta1", 3);
  SymScalar sum = add(a, SymScalar(Rat(mpz_class(1), mpz_class(2))));
  CHECK(sum == SymScalar(1) + named("eta1", 3));
  CHECK(sum.coeff("1") == Rat(1));
  CHECK(sum.coeff("eta1") == Rat(3));
}

TEST_CASE("scale examples") {
  CHECK(scale(Rat(0), named("eta1", 7)).is_zero());
  CHECK(scale(Rat(-1), SymScalar(4)) == SymScalar(-4));
  CHECK(scale(Rat(mpz_class(1), mpz_class(2)), named("d_1_A", 6)) == named("d_1_A", 3));
}

TEST_CASE("is_zero examples") {
  CHECK(is_zero(SymScalar()));
  CHECK(is_zero(SymScalar(0)));
  CHECK(SymScalar(0).terms().empty());
  CHECK_FALSE(is_zero(named("eta2", Rat(mpz_class(1), mpz_class(3)))));
}

TEST_CASE("symbolic scalars form a Q-module") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    SymScalar a = summa::testing::random_coeff(rng, 0.7);
    SymScalar b = summa::testing::random_coeff(rng, 0.7);
    SymScalar c = summa::testing::random_coeff(rng, 0.7);
    Rat r = summa::testing::random_rat(rng);
    Rat s = summa::testing::random_rat(rng);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(scale(r, add(a, b)) == add(scale(r, a), scale(r, b)));
    CHECK(scale(r + s, a) == add(scale(r, a), scale(s, a)));
    CHECK((a - a).is_zero());
    for (const SymScalar& x : {add(a, b), a - b, scale(r, a), -c}) CHECK(no_zero_entries(x));
  }
}

TEST_CASE("rational view") {
  CHECK(SymScalar(3).is_rational());
  CHECK(SymScalar().as_rational() == Rat(0));
  CHECK_FALSE(named("eta1", 1).as_rational().has_value());
}

TEST_CASE("symbol products need a rational side") {
  SymScalar eta = named("eta1", 2);
  CHECK(multiply(eta, SymScalar(3)) == named("eta1", 6));
  CHECK(multiply(SymScalar(Rat(mpz_class(1), mpz_class(2))), eta) == named("eta1", 1));
  CHECK(multiply(SymScalar(), eta).is_zero());
  CHECK_THROWS_AS(multiply(eta, named("eta2", 1)), SymbolicProduct);
}

TEST_CASE("symbol grammar") {
  CHECK(sym::d(2, "A") == "d_2_A");
  CHECK(sym::phi("B", 1, 3) == "phi_B_1@3");
  CHECK(sym::psi(4) == "psi_4");
  CHECK(sym::Psi(5) == "Psi_5");
  CHECK(sym::eta_b() == "eta_b");
  CHECK(sym::eta_b("2") == "eta_b_2");
  CHECK(sym::product("d_1_A", "Psi_2") == "Psi_2*d_1_A");
  CHECK(sym::product("Psi_2", "d_1_A") == "Psi_2*d_1_A");
  for (const char* ok : {"1", "eta1", "phi_A_1@1", "x_y", "Psi_2*d_1_A"}) {
    CAPTURE(ok);
    CHECK(sym::is_valid(ok));
  }
  for (const char* bad : {"", "1x", "a b", "phi@", "a@1x", "d_1_A*Psi_2", "a*", "*a", "a*b*c", "1*a"}) {
    CAPTURE(bad);
    CHECK_FALSE(sym::is_valid(bad));
  }
  CHECK_THROWS_AS(SymScalar::symbol("bad name"), std::invalid_argument);
}

TEST_CASE("string form") {
  SymScalar s = SymScalar(Rat(mpz_class(3), mpz_class(2))) + named("eta1", 1) + named("d_1_A", -2);
  CHECK(s.str() == "3/2 - 2*d_1_A + eta1");
  CHECK(SymScalar().str() == "0");
  std::ostringstream os;
  os << named("eta2", -1);
  CHECK(os.str() == "-eta2");
}
