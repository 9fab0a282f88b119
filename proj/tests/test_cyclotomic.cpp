#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "orbicalc/cyclotomic.hpp"
#include "orbicalc/linalg.hpp"

using namespace orbicalc;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 60; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == totient(n));
}

TEST_CASE("roots of unity sum to zero and match numerics") {
  for (int n = 2; n <= 30; ++n) {
    Cyclotomic sum;
    for (int k = 0; k < n; ++k) sum += Cyclotomic::root_of_unity(n, k);
    CHECK(sum.is_zero());
    for (int k = 0; k < n; ++k) {
      const auto z = Cyclotomic::root_of_unity(n, k).to_complex();
      CHECK(std::abs(z - std::polar(1.0, 2 * std::numbers::pi * k / n)) < 1e-12);
    }
  }
}

TEST_CASE("mixed conductors compare by value") {
  // zeta_6^2 = zeta_3; zeta_4^2 = -1; zeta_2 = -1.
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1L));
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1L));
  const auto w = Cyclotomic::root_of_unity(3);
  const auto i = Cyclotomic::root_of_unity(4);
  CHECK((w * i) == Cyclotomic::root_of_unity(12, 4 + 3));
}

TEST_CASE("field operations agree with complex arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int n : {3, 4, 5, 8, 12, 15}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> a(n), b(n);
      for (int k = 0; k < n; ++k) {
        a[k] = coeff(rng);
        b[k] = coeff(rng);
      }
      const auto x = Cyclotomic::from_powers(n, a);
      const auto y = Cyclotomic::from_powers(n, b);
      CHECK(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9);
      CHECK(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9);
      CHECK(std::abs(x.conj().to_complex() - std::conj(x.to_complex())) < 1e-9);
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == Cyclotomic(1L));
        CHECK(x.norm() != 0);
      }
    }
  }
}

TEST_CASE("rationality and reality") {
  const auto z5 = Cyclotomic::root_of_unity(5);
  const auto c = z5 + z5.conj();  // 2 cos(2 pi / 5), real irrational
  CHECK(c.is_real());
  CHECK_FALSE(c.is_rational());
  CHECK((c * c + c).is_rational());  // golden-ratio relation: c^2 + c = 1
  CHECK((c * c + c).to_rational() == 1);
  CHECK(Cyclotomic(Rational(3, 4)).to_string() == "3/4");
  CHECK((Cyclotomic(-1L) - Cyclotomic::root_of_unity(3)).to_string() == "-1-E(3)");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("linear algebra over exact and approximate scalars") {
  Matrix<Rational> m(3, 3);
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(rank(m) == 2);
  const auto ker = nullspace(m);
  REQUIRE(ker.cols() == 1);
  CHECK(is_zero_matrix(m * ker));
  CHECK(column_basis(m).cols() == 2);

  Matrix<double> d(2, 2);
  d(0, 0) = 1;
  d(0, 1) = 2;
  d(1, 0) = 2;
  d(1, 1) = 4 + 1e-13;
  CHECK(rank(d, zero_threshold(d, 1e-9)) == 1);
  CHECK(rank(d, 0.0) == 2);

  Matrix<Cyclotomic> c(2, 2);
  const auto w = Cyclotomic::root_of_unity(3);
  c(0, 0) = 1;
  c(0, 1) = w;
  c(1, 0) = w;
  c(1, 1) = w * w;
  CHECK(rank(c) == 1);
}
