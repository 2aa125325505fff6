#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "oforge/lincomb.hpp"
#include "oforge/rational.hpp"

namespace oforge {

// Incremental exact row space in reduced echelon form.
//
// Rows are kept fraction-free: integer coefficients with content 1 and a
// positive leading coefficient, sorted by the total order on basis keys.
// The reduced form of a given span is unique, so the basis() output does not
// depend on insertion order.
template <class B>
class RowSpace {
 public:
  using Row = std::vector<std::pair<B, Int>>;

  std::size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  // Inserts v; returns true iff the rank grew (by exactly one).
  bool insert(const LinComb<B>& v) {
    Row r = to_int_row(v);
    reduce_full(r);
    if (r.empty()) return false;
    normalize(r);
    const B lead = r.front().first;
    for (auto& [plead, idx] : pivots_) {
      (void)plead;
      eliminate_key(rows_[idx], lead, r);
    }
    pivots_.emplace(lead, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const LinComb<B>& v) const {
    Row r = to_int_row(v);
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) return false;
      combine_lead(r, rows_[it->second]);
    }
    return true;
  }

  // Pivot rows as rational combinations, in leading-key order.
  std::vector<LinComb<B>> basis() const {
    std::vector<LinComb<B>> out;
    out.reserve(rows_.size());
    for (const auto& [lead, idx] : pivots_) {
      (void)lead;
      LinComb<B> w;
      for (const auto& [b, c] : rows_[idx]) w.add_term(b, Rational(c));
      out.push_back(std::move(w));
    }
    return out;
  }

 private:
  static Row to_int_row(const LinComb<B>& v) {
    Int l = 1;
    for (const auto& [b, c] : v.terms()) l = lcm(l, denominator(c));
    Row r;
    r.reserve(v.size());
    for (const auto& [b, c] : v.terms()) r.emplace_back(b, numerator(c) * (l / denominator(c)));
    return r;
  }

  static void normalize(Row& r) {
    if (r.empty()) return;
    Int g = 0;
    for (const auto& [b, c] : r) g = gcd(g, c);
    if (g < 0) g = -g;
    bool flip = r.front().second < 0;
    if (g == 1 && !flip) return;
    for (auto& [b, c] : r) {
      if (g != 1) c /= g;
      if (flip) c = -c;
    }
  }

  // r := p_lead * r - r_lead * p, where both share the same leading key.
  static void combine_lead(Row& r, const Row& p) {
    Row out = linear_merge(p.front().second, r, -r.front().second, p);
    normalize(out);
    r = std::move(out);
  }

  // Removes the entry with key k from row (if present) using pivot row p with
  // leading key k. Keeps row normalized.
  static void eliminate_key(Row& row, const B& k, const Row& p) {
    auto pos = std::lower_bound(row.begin(), row.end(), k,
                                [](const auto& e, const B& key) { return e.first < key; });
    if (pos == row.end() || pos->first != k) return;
    Row out = linear_merge(p.front().second, row, -pos->second, p);
    normalize(out);
    row = std::move(out);
  }

  static Row linear_merge(const Int& ca, const Row& a, const Int& cb, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        Int c = ca * ia->second;
        if (c != 0) out.emplace_back(ia->first, std::move(c));
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        Int c = cb * ib->second;
        if (c != 0) out.emplace_back(ib->first, std::move(c));
        ++ib;
      } else {
        Int c = ca * ia->second + cb * ib->second;
        if (c != 0) out.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  // Reduces r against all pivots so that no pivot lead occurs anywhere in r.
  void reduce_full(Row& r) const {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) break;
      combine_lead(r, rows_[it->second]);
    }
    // Pivot rows carry no foreign pivot leads in their tails, so one
    // left-to-right pass clears the remaining entries.
    for (std::size_t i = 1; i < r.size();) {
      auto it = pivots_.find(r[i].first);
      if (it == pivots_.end()) {
        ++i;
        continue;
      }
      const Row& p = rows_[it->second];
      Row out = linear_merge(p.front().second, r, -r[i].second, p);
      normalize(out);
      r = std::move(out);
    }
  }

  std::vector<Row> rows_;
  std::map<B, std::size_t> pivots_;
};

}  // namespace oforge
