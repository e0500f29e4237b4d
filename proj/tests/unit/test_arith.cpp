#include <catch2/catch_amalgamated.hpp>

#include "parq/arith.hpp"

using namespace parq;

TEST_CASE("gaussian rational arithmetic") {
  GaussRat a(Rational(1, 2), Rational(3));
  GaussRat b(Rational(-2), Rational(1, 3));
  CHECK(a + b == GaussRat(Rational(-3, 2), Rational(10, 3)));
  CHECK(a * GaussRat::i() == GaussRat(Rational(-3), Rational(1, 2)));
  CHECK((a * b) / b == a);
  CHECK(a - a == GaussRat(0));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
}

TEST_CASE("gaussian rational division by zero throws") {
  CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), std::domain_error);
}

TEST_CASE("to_complex") {
  GaussRat q(Rational(1, 4), Rational(-3, 8));
  auto z = q.to_complex();
  CHECK(z.real() == 0.25);
  CHECK(z.imag() == -0.375);
}

TEST_CASE("nearest gaussian integer distance") {
  CHECK(gaussian_integer_distance({3.0, -2.0}) == 0.0);
  CHECK(gaussian_integer_distance({3.25, -2.0}) == Catch::Approx(0.25));
  CHECK(gaussian_integer_distance({0.5, 0.5}) == Catch::Approx(std::sqrt(0.5)));
}

TEST_CASE("trace sign normalization") {
  CHECK(sign_normalize(Complex(-2.0, 1.0)) == Complex(2.0, -1.0));
  CHECK(sign_normalize(Complex(2.0, -1.0)) == Complex(2.0, -1.0));
  CHECK(sign_normalize(Complex(0.0, -4.0)) == Complex(0.0, 4.0));
  CHECK(sign_normalize(GaussRat(Rational(0), Rational(-2))) ==
        GaussRat(Rational(0), Rational(2)));
}
