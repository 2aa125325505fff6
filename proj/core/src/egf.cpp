#include "oforge/egf.hpp"

namespace oforge {

TruncEgf TruncEgf::x(int order) {
  TruncEgf f(order);
  if (order >= 1) f.c_[1] = 1;
  return f;
}

TruncEgf TruncEgf::constant(const Rational& c, int order) {
  TruncEgf f(order);
  f.c_[0] = c;
  return f;
}

TruncEgf TruncEgf::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) fail_input("series needs at least the constant coefficient");
  TruncEgf f(static_cast<int>(coeffs.size()) - 1);
  f.c_ = std::move(coeffs);
  return f;
}

const Rational& TruncEgf::coeff(int n) const {
  if (n < 0 || n > order()) fail_bound("coefficient index out of range");
  return c_[static_cast<std::size_t>(n)];
}

Rational& TruncEgf::coeff(int n) {
  if (n < 0 || n > order()) fail_bound("coefficient index out of range");
  return c_[static_cast<std::size_t>(n)];
}

Int TruncEgf::dim(int n) const {
  Rational d = coeff(n) * Rational(factorial(n));
  if (denominator(d) != 1) fail_input("dimension is not an integer at n=" + std::to_string(n));
  return numerator(d);
}

TruncEgf TruncEgf::operator+(const TruncEgf& o) const {
  int N = std::min(order(), o.order());
  TruncEgf out(N);
  for (int i = 0; i <= N; ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

TruncEgf TruncEgf::operator-(const TruncEgf& o) const {
  int N = std::min(order(), o.order());
  TruncEgf out(N);
  for (int i = 0; i <= N; ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

TruncEgf TruncEgf::operator*(const TruncEgf& o) const {
  int N = std::min(order(), o.order());
  TruncEgf out(N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) out.c_[i + j] += c_[i] * o.c_[j];
  return out;
}

TruncEgf TruncEgf::scaled(const Rational& c) const {
  TruncEgf out(order());
  for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] * c;
  return out;
}

TruncEgf TruncEgf::reciprocal() const {
  if (c_[0] == 0) fail_input("reciprocal needs a nonzero constant term");
  int N = order();
  TruncEgf out(N);
  out.c_[0] = Rational(1) / c_[0];
  for (int n = 1; n <= N; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) s += c_[k] * out.c_[n - k];
    out.c_[n] = -s / c_[0];
  }
  return out;
}

TruncEgf TruncEgf::sqrt() const {
  if (c_[0] != 1) fail_input("sqrt needs constant term 1");
  int N = order();
  TruncEgf out(N);
  out.c_[0] = 1;
  for (int n = 1; n <= N; ++n) {
    // 2 g_0 g_n = c_n - sum_{1<=k<=n-1} g_k g_{n-k}
    Rational s(0);
    for (int k = 1; k < n; ++k) s += out.c_[k] * out.c_[n - k];
    out.c_[n] = (c_[n] - s) / Rational(2);
  }
  return out;
}

TruncEgf TruncEgf::exp() const {
  if (c_[0] != 0) fail_input("exp needs constant term 0");
  int N = order();
  TruncEgf out(N);
  out.c_[0] = 1;
  // g' = f' g  =>  n g_n = sum_{k=1..n} k c_k g_{n-k}
  for (int n = 1; n <= N; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) s += Rational(k) * c_[k] * out.c_[n - k];
    out.c_[n] = s / Rational(n);
  }
  return out;
}

TruncEgf TruncEgf::log1p() const {
  if (c_[0] != 0) fail_input("log1p needs constant term 0");
  int N = order();
  // g = log(1+f)  =>  g' (1+f) = f'
  TruncEgf out(N);
  for (int n = 1; n <= N; ++n) {
    Rational s = Rational(n) * c_[n];
    for (int k = 1; k < n; ++k) s -= Rational(k) * out.c_[k] * c_[n - k];
    out.c_[n] = s / Rational(n);
  }
  return out;
}

TruncEgf TruncEgf::compose(const TruncEgf& inner) const {
  if (inner.c_[0] != 0) fail_input("compose needs inner constant term 0");
  int N = std::min(order(), inner.order());
  // Horner over truncated polynomials; c_k with k > N cannot reach order N
  // because the inner series has no constant term.
  TruncEgf acc(N);
  for (int k = N; k >= 0; --k) {
    acc = acc * inner;
    acc.coeff(0) += c_[static_cast<std::size_t>(k)];
  }
  return acc;
}

TruncEgf TruncEgf::derivative() const {
  int N = order();
  TruncEgf out(N);
  for (int n = 1; n <= N; ++n) out.c_[n - 1] = Rational(n) * c_[n];
  out.c_[N] = 0;
  return out;
}

TruncEgf TruncEgf::compositional_inverse() const {
  if (c_[0] != 0) fail_input("compositional inverse needs constant term 0");
  if (c_[1] == 0) fail_input("compositional inverse needs a nonzero linear term");
  int N = order();
  TruncEgf g(N);
  g.coeff(1) = Rational(1) / c_[1];
  // Newton: g <- g - (f(g) - x) / f'(g); each step doubles the precision.
  TruncEgf id = TruncEgf::x(N);
  for (int it = 0; it < N + 2; ++it) {
    TruncEgf err = compose(g) - id;
    bool zero = true;
    for (int i = 0; i <= N; ++i)
      if (err.coeff(i) != 0) {
        zero = false;
        break;
      }
    if (zero) break;
    TruncEgf correction = err * derivative().compose(g).reciprocal();
    g = g - correction;
  }
  return g;
}

TruncEgf hilbert_commag(int order) {
  TruncEgf f(order);
  f.coeff(0) = 1;
  if (order >= 1) f.coeff(1) = Rational(-2);
  // 1 - sqrt(1 - 2x)
  TruncEgf root = f.sqrt();
  TruncEgf one = TruncEgf::constant(Rational(1), order);
  return one - root;
}

TruncEgf hilbert_sp(int order) {
  TruncEgf one = TruncEgf::constant(Rational(1), order);
  return hilbert_commag(order).exp() - one;
}

TruncEgf hilbert_sp_dual(int order) {
  // ((1 - log(1-x))^2 - 1) / 2
  TruncEgf minus_x(order);
  if (order >= 1) minus_x.coeff(1) = Rational(-1);
  TruncEgf log_part = minus_x.log1p();  // log(1 - x)
  TruncEgf one = TruncEgf::constant(Rational(1), order);
  TruncEgf base = one - log_part;
  return (base * base - one).scaled(Rational(1, 2));
}

TruncEgf duality_residual(const TruncEgf& h, const TruncEgf& h_dual) {
  int N = std::min(h.order(), h_dual.order());
  // -h_dual(-t)
  TruncEgf inner(N);
  for (int n = 0; n <= N; ++n) {
    Rational c = h_dual.coeff(n);
    inner.coeff(n) = (n % 2 == 0) ? -c : c;
  }
  return h.compose(inner) - TruncEgf::x(N);
}

}  // namespace oforge
