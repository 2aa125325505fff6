#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oforge/egf.hpp"
#include "oforge/error.hpp"

using namespace oforge;

namespace {

// Independent oracle for sqrt(1-2x): the binomial series
// (1+u)^(1/2) = sum_n C(1/2, n) u^n with u = -2x.
Rational sqrt_one_minus_2x_coeff(int n) {
  Rational binom(1);
  for (int i = 0; i < n; ++i) {
    binom *= Rational(1, 2) - Rational(i);
    binom /= Rational(i + 1);
  }
  Rational pow(1);
  for (int i = 0; i < n; ++i) pow *= Rational(-2);
  return binom * pow;
}

}  // namespace

TEST_CASE("magma series against the binomial oracle") {
  const int N = 10;
  TruncEgf f = hilbert_commag(N);
  CHECK(f.coeff(0) == 0);
  for (int n = 1; n <= N; ++n) CHECK(f.coeff(n) == -sqrt_one_minus_2x_coeff(n));
  CHECK(f.dim(1) == 1);
  CHECK(f.dim(2) == 1);
  CHECK(f.dim(3) == 3);
  CHECK(f.dim(4) == 15);
  CHECK(f.dim(5) == 105);
}

TEST_CASE("series identities") {
  const int N = 12;
  TruncEgf x = TruncEgf::x(N);
  CHECK(x.compositional_inverse() == x);
  CHECK(x.log1p().exp() == TruncEgf::constant(Rational(1), N) + x);

  TruncEgf two_x = x.scaled(Rational(2));
  TruncEgf inv = two_x.compositional_inverse();
  CHECK(inv.coeff(1) == Rational(1, 2));
  CHECK(two_x.compose(inv) == x);

  // sqrt squares back.
  TruncEgf f(N);
  f.coeff(0) = 1;
  f.coeff(1) = Rational(-2);
  TruncEgf r = f.sqrt();
  CHECK(r * r == f);

  // reciprocal multiplies back to 1.
  TruncEgf g = TruncEgf::constant(Rational(3), N) + x;
  CHECK(g * g.reciprocal() == TruncEgf::constant(Rational(1), N));
}

TEST_CASE("dual series dimensions") {
  TruncEgf dual = hilbert_sp_dual(12);
  const long expected[] = {1, 2, 5, 17, 74, 394, 2484, 18108, 149904};
  for (int n = 1; n <= 9; ++n) CHECK(dual.dim(n) == expected[n - 1]);
}

TEST_CASE("functional equation residual vanishes") {
  TruncEgf sp = hilbert_sp(12);
  TruncEgf dual = hilbert_sp_dual(12);
  TruncEgf res = duality_residual(sp, dual);
  for (int n = 0; n <= 12; ++n) CHECK(res.coeff(n) == 0);

  // A wrong pairing leaves a nonzero residual.
  TruncEgf wrong = duality_residual(sp, hilbert_commag(12));
  bool nonzero = false;
  for (int n = 0; n <= 12; ++n)
    if (wrong.coeff(n) != 0) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("assembly series two ways") {
  TruncEgf via_exp = hilbert_sp(12);
  TruncEgf dual = hilbert_sp_dual(12);
  TruncEgf inner(12);
  for (int n = 0; n <= 12; ++n) {
    Rational c = dual.coeff(n);
    inner.coeff(n) = (n % 2 == 0) ? -c : c;
  }
  CHECK(via_exp == inner.compositional_inverse());
}

TEST_CASE("series preconditions") {
  const int N = 6;
  TruncEgf x = TruncEgf::x(N);
  TruncEgf one = TruncEgf::constant(Rational(1), N);
  CHECK_THROWS_AS((one + x).exp(), Error);
  CHECK_THROWS_AS((one + x).compositional_inverse(), Error);
  CHECK_THROWS_AS((x * x).compositional_inverse(), Error);  // zero linear term
  CHECK_THROWS_AS(TruncEgf(N).reciprocal(), Error);
  CHECK_THROWS_AS((x + x).sqrt(), Error);  // constant term 0, not 1
  CHECK_THROWS_AS(x.compose(one), Error);  // inner constant term nonzero

  // Non-integral dimension is rejected.
  TruncEgf odd(2);
  odd.coeff(2) = Rational(1, 3);
  CHECK_THROWS_AS(odd.dim(2), Error);
}
