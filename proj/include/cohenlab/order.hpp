#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "cohenlab/errors.hpp"

namespace cohenlab {

// Poset classes are duck-typed. Each provides:
//   using Cond;
//   Cond top() const;
//   bool leq(p, q) const;                       p extends q
//   bool contains(c) const;                     carrier membership
//   std::size_t size_of(c) const;               enumeration grading
//   std::size_t max_growth(c) const;            how far size can still grow
//   bool cond_less(a, b) const;                 fixed total enumeration order
//   std::vector<Cond> carrier(bound) const;     all conditions of size <= bound
//   std::vector<Cond> upset(c) const;           all carrier q with c <= q
//   std::vector<Cond> extensions_exact(c, k);   carrier q <= c, size_of(q) ==
//                                               size_of(c) + k, in order

template <class Cond>
struct DenseSet {
  std::function<bool(const Cond&)> pred;
  std::string desc;
};

// upward-closed directed set, kept as a sorted element list
template <class Cond>
struct FilterSet {
  std::vector<Cond> elems;

  static FilterSet from(std::vector<Cond> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return FilterSet{std::move(v)};
  }

  bool contains(const Cond& c) const {
    return std::binary_search(elems.begin(), elems.end(), c);
  }

  std::size_t size() const { return elems.size(); }

  bool operator==(const FilterSet& o) const { return elems == o.elems; }
};

template <class P>
FilterSet<typename P::Cond> upward_close(
    const P& poset, const std::vector<typename P::Cond>& seeds) {
  std::vector<typename P::Cond> out;
  for (const auto& s : seeds)
    for (auto& q : poset.upset(s)) out.push_back(std::move(q));
  return FilterSet<typename P::Cond>::from(std::move(out));
}

struct FilterCheck {
  bool upward_closed = true;
  bool directed = true;
  std::string detail;
  bool ok() const { return upward_closed && directed; }
};

template <class P>
FilterCheck check_filter(const P& poset, const FilterSet<typename P::Cond>& f) {
  FilterCheck r;
  if (f.elems.empty()) {
    r.directed = false;
    r.detail = "empty";
    return r;
  }
  for (const auto& c : f.elems) {
    for (const auto& q : poset.upset(c)) {
      if (!f.contains(q)) {
        r.upward_closed = false;
        r.detail = "upward closure fails";
        return r;
      }
    }
  }
  // fast path: a global lower bound witnesses directedness outright
  for (const auto& m : f.elems) {
    bool global = true;
    for (const auto& x : f.elems)
      if (!poset.leq(m, x)) {
        global = false;
        break;
      }
    if (global) return r;
  }
  for (std::size_t i = 0; i < f.elems.size(); ++i)
    for (std::size_t j = i + 1; j < f.elems.size(); ++j) {
      bool found = false;
      for (const auto& w : f.elems)
        if (poset.leq(w, f.elems[i]) && poset.leq(w, f.elems[j])) {
          found = true;
          break;
        }
      if (!found) {
        r.directed = false;
        r.detail = "no common lower bound in filter";
        return r;
      }
    }
  return r;
}

template <class Cond>
bool is_generic(const FilterSet<Cond>& f,
                const std::vector<DenseSet<Cond>>& dense_list) {
  for (const auto& d : dense_list) {
    bool met = false;
    for (const auto& c : f.elems)
      if (d.pred(c)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

struct SearchLimits {
  std::size_t max_extra = static_cast<std::size_t>(-1);
  std::size_t budget = std::size_t{1} << 22;
};

// least q <= c (in the fixed enumeration order, graded by size) with pred(q),
// or nullopt when the truncated carrier below c holds no such q
template <class P>
std::optional<typename P::Cond> find_least_below(
    const P& poset, const typename P::Cond& c,
    const std::function<bool(const typename P::Cond&)>& pred,
    const SearchLimits& lim = {}) {
  std::size_t spent = 0;
  std::size_t cap = std::min(lim.max_extra, poset.max_growth(c));
  for (std::size_t k = 0;; ++k) {
    for (const auto& q : poset.extensions_exact(c, k)) {
      if (++spent > lim.budget)
        throw BoundExceeded("search budget exhausted below a condition");
      if (pred(q)) return q;
    }
    if (k >= cap) break;
  }
  return std::nullopt;
}

template <class Cond>
struct GenericResult {
  FilterSet<Cond> filter;
  std::vector<Cond> chain;  // start first, strongest last
};

// descending chain through the dense sets in list order, then upward closure
template <class P>
GenericResult<typename P::Cond> build_generic(
    const P& poset, const std::vector<DenseSet<typename P::Cond>>& dense_list,
    const typename P::Cond& start, const SearchLimits& lim = {}) {
  if (!poset.contains(start))
    throw MalformedCondition("start lies outside the carrier");
  GenericResult<typename P::Cond> out;
  out.chain.push_back(start);
  for (std::size_t i = 0; i < dense_list.size(); ++i) {
    auto hit = find_least_below(poset, out.chain.back(), dense_list[i].pred, lim);
    if (!hit) throw NotDense(i);
    if (!(*hit == out.chain.back())) out.chain.push_back(*hit);
  }
  out.filter = upward_close(poset, {out.chain.back()});
  return out;
}

template <class P>
bool is_dense(const P& poset, const DenseSet<typename P::Cond>& d,
              std::size_t carrier_bound, const SearchLimits& lim = {}) {
  for (const auto& p : poset.carrier(carrier_bound))
    if (!find_least_below(poset, p, d.pred, lim)) return false;
  return true;
}

struct PosetCheck {
  bool reflexive = true;
  bool transitive = true;
  bool antisymmetric = true;
  bool top_is_max = true;
  bool ok() const {
    return reflexive && transitive && antisymmetric && top_is_max;
  }
};

// sanity sweep over a truncated carrier; antisymmetry is skippable for
// preorders whose order identifies equivalent conditions
template <class P>
PosetCheck check_poset(const P& poset, std::size_t carrier_bound,
                       bool check_antisym = true) {
  PosetCheck r;
  auto cs = poset.carrier(carrier_bound);
  for (const auto& a : cs) {
    if (!poset.leq(a, a)) r.reflexive = false;
    if (!poset.leq(a, poset.top())) r.top_is_max = false;
  }
  for (const auto& a : cs)
    for (const auto& b : cs) {
      if (check_antisym && !(a == b) && poset.leq(a, b) && poset.leq(b, a))
        r.antisymmetric = false;
      if (!poset.leq(a, b)) continue;
      for (const auto& c : cs)
        if (poset.leq(b, c) && !poset.leq(a, c)) r.transitive = false;
    }
  return r;
}

// display form for any condition shape: sequences as themselves, carrier
// indices as numbers, coordinate maps as {coord:bits,...}, nested
// containers recursively
template <class C>
std::string cond_repr(const C& c) {
  if constexpr (std::is_same_v<C, std::string>) {
    return c.empty() ? std::string("(empty)") : c;
  } else if constexpr (std::is_integral_v<C>) {
    return std::to_string(c);
  } else if constexpr (std::is_same_v<C, std::map<int, std::string>>) {
    std::string out = "{";
    bool first = true;
    for (const auto& [coord, bits] : c) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(coord) + ":" + bits;
    }
    return out + "}";
  } else {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += cond_repr(c[i]);
    }
    return out + "]";
  }
}

}  // namespace cohenlab
