#pragma once

#include <vector>

#include "oforge/rational.hpp"

namespace oforge {

// Truncated exponential generating function with exact rational coefficients.
// dim(n) = n! * c_n.
class TruncEgf {
 public:
  explicit TruncEgf(int order) : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
    if (order < 0) fail_bound("series order must be nonnegative");
  }
  static TruncEgf x(int order);
  static TruncEgf constant(const Rational& c, int order);
  static TruncEgf from_coeffs(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int n) const;
  Rational& coeff(int n);
  Int dim(int n) const;  // fails if not integral

  TruncEgf operator+(const TruncEgf& o) const;
  TruncEgf operator-(const TruncEgf& o) const;
  TruncEgf operator*(const TruncEgf& o) const;
  TruncEgf scaled(const Rational& c) const;

  TruncEgf reciprocal() const;             // c0 != 0
  TruncEgf sqrt() const;                   // c0 == 1
  TruncEgf exp() const;                    // c0 == 0
  TruncEgf log1p() const;                  // log(1 + f), c0 == 0
  TruncEgf compose(const TruncEgf& inner) const;        // inner c0 == 0
  TruncEgf compositional_inverse() const;  // c0 == 0, c1 != 0
  TruncEgf derivative() const;

  bool operator==(const TruncEgf& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

// 1 - sqrt(1 - 2x): the free symmetric binary magma.
TruncEgf hilbert_commag(int order);
// exp(1 - sqrt(1 - 2x)) - 1: assemblies of magma trees.
TruncEgf hilbert_sp(int order);
// ((1 - log(1 - x))^2 - 1) / 2: the Koszul-dual series.
TruncEgf hilbert_sp_dual(int order);

// H(-D(-t)) - t, the functional-equation residual linking a series with its
// dual; zero through the given order when the pair is genuinely dual.
TruncEgf duality_residual(const TruncEgf& h, const TruncEgf& h_dual);

}  // namespace oforge
