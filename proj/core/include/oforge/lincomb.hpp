#pragma once

#include <map>
#include <set>
#include <utility>

#include "oforge/rational.hpp"

namespace oforge {

// A formal finite linear combination over a canonically ordered basis B.
// B must have a strict total order (operator<) on canonical forms.
// Invariant: no stored coefficient is zero; equality is term-map equality.
template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;

  static LinComb basis(B b, Rational c = Rational(1)) {
    LinComb w;
    w.add_term(std::move(b), std::move(c));
    return w;
  }

  void add_term(const B& b, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  LinComb scaled(const Rational& c) const {
    LinComb w;
    if (c == 0) return w;
    for (const auto& [b, k] : terms_) w.terms_.emplace(b, k * c);
    return w;
  }
  friend LinComb operator*(const Rational& c, const LinComb& a) { return a.scaled(c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::set<B> support() const {
    std::set<B> s;
    for (const auto& [b, c] : terms_) s.insert(b);
    return s;
  }

  template <class Fn>
  auto map_basis(Fn&& fn) const {
    using B2 = decltype(fn(std::declval<const B&>()));
    LinComb<B2> out;
    for (const auto& [b, c] : terms_) out.add_term(fn(b), c);
    return out;
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

}  // namespace oforge
