#include "cohenlab/finite_poset.hpp"

#include <algorithm>

namespace cohenlab {

FinitePoset::FinitePoset(int size,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         int top)
    : n_(size), top_(top), le_(static_cast<std::size_t>(size) * size, 0) {
  if (size < 1) throw MalformedCondition("poset needs at least one element");
  if (top < 0 || top >= size) throw MalformedCondition("top out of range");
  for (int i = 0; i < n_; ++i) le_[static_cast<std::size_t>(i) * n_ + i] = 1;
  for (auto& [p, q] : leq_pairs) {
    if (p < 0 || p >= n_ || q < 0 || q >= n_)
      throw MalformedCondition("leq pair out of range");
    le_[static_cast<std::size_t>(p) * n_ + q] = 1;
  }
  // transitive closure
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (leq(i, k))
        for (int j = 0; j < n_; ++j)
          if (leq(k, j)) le_[static_cast<std::size_t>(i) * n_ + j] = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (leq(i, j) && leq(j, i))
        throw MalformedCondition("order not antisymmetric");
  for (int i = 0; i < n_; ++i)
    if (!leq(i, top_)) throw MalformedCondition("top is not a maximum");
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i + 1, i});
  return FinitePoset(n, pairs, 0);
}

FinitePoset FinitePoset::diamond() {
  return FinitePoset(4, {{1, 0}, {2, 0}, {3, 1}, {3, 2}}, 0);
}

FinitePoset FinitePoset::flat(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.push_back({i, 0});
  return FinitePoset(n + 1, pairs, 0);
}

std::vector<int> FinitePoset::carrier(std::size_t) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

std::vector<int> FinitePoset::upset(int c) const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q)
    if (leq(c, q)) out.push_back(q);
  return out;
}

std::vector<int> FinitePoset::downset(int c) const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q)
    if (leq(q, c)) out.push_back(q);
  return out;
}

std::vector<int> FinitePoset::extensions_exact(int c, std::size_t k) const {
  if (k > 0) return {};
  return downset(c);
}

bool FinitePoset::is_minimal(int c) const {
  for (int q = 0; q < n_; ++q)
    if (q != c && leq(q, c)) return false;
  return true;
}

std::vector<int> FinitePoset::atoms() const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q)
    if (is_minimal(q)) out.push_back(q);
  return out;
}

bool FinitePoset::compatible(int a, int b) const {
  for (int r = 0; r < n_; ++r)
    if (leq(r, a) && leq(r, b)) return true;
  return false;
}

std::vector<FinitePoset> topped_poset_catalog(int max_size) {
  std::vector<FinitePoset> out;
  for (int n = 1; n <= max_size; ++n) {
    // enumerate strict relations over the n*(n-1) off-diagonal cells
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) cells.push_back({i, j});
    std::uint64_t total = std::uint64_t{1} << cells.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i) * n + i] = 1;
      for (std::size_t b = 0; b < cells.size(); ++b)
        if (mask & (std::uint64_t{1} << b))
          le[static_cast<std::size_t>(cells[b].first) * n + cells[b].second] = 1;
      auto at = [&](int i, int j) {
        return le[static_cast<std::size_t>(i) * n + j] != 0;
      };
      bool ok = true;
      for (int i = 0; ok && i < n; ++i)
        for (int j = 0; ok && j < n; ++j) {
          if (i != j && at(i, j) && at(j, i)) ok = false;
          for (int k = 0; ok && k < n; ++k)
            if (at(i, j) && at(j, k) && !at(i, k)) ok = false;
        }
      if (!ok) continue;
      int top = -1;
      for (int t = 0; t < n && top < 0; ++t) {
        bool all = true;
        for (int i = 0; i < n; ++i) all = all && at(i, t);
        if (all) top = t;
      }
      if (top < 0) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && at(i, j)) pairs.push_back({i, j});
      out.emplace_back(n, pairs, top);
    }
  }
  return out;
}

}  // namespace cohenlab
