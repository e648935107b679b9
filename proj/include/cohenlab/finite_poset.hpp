#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cohenlab/errors.hpp"

namespace cohenlab {

// Partial order with a maximum over an explicit carrier 0..size-1.
// Convention throughout: leq(p, q) means p extends (is stronger than) q.
// The given pairs are closed reflexively and transitively; antisymmetry
// and maximality of top are then validated.
class FinitePoset {
 public:
  using Cond = int;

  FinitePoset(int size, const std::vector<std::pair<int, int>>& leq_pairs,
              int top);

  // n-element chain: n-1 <= ... <= 1 <= 0, top = 0
  static FinitePoset chain(int n);
  // top 0, incomparable middles 1 and 2, bottom 3
  static FinitePoset diamond();
  // top 0 over n incomparable atoms 1..n
  static FinitePoset flat(int n);

  int size() const { return n_; }
  Cond top() const { return top_; }
  bool leq(Cond p, Cond q) const { return le_[static_cast<std::size_t>(p) * n_ + q] != 0; }
  bool contains(Cond c) const { return 0 <= c && c < n_; }

  std::size_t size_of(Cond) const { return 0; }
  std::size_t max_growth(Cond) const { return 0; }
  bool cond_less(Cond a, Cond b) const { return a < b; }

  std::vector<Cond> carrier(std::size_t bound = static_cast<std::size_t>(-1)) const;
  std::vector<Cond> upset(Cond c) const;    // all q with c <= q
  std::vector<Cond> downset(Cond c) const;  // all q with q <= c
  // extensions adding exactly k to the grading; everything is grade 0 here
  std::vector<Cond> extensions_exact(Cond c, std::size_t k) const;

  bool is_minimal(Cond c) const;
  std::vector<Cond> atoms() const;
  bool compatible(Cond a, Cond b) const;  // common lower bound exists

  // optional display names for carrier elements (used by json io)
  std::vector<std::string> labels;

 private:
  int n_;
  int top_;
  std::vector<std::uint8_t> le_;  // row-major, le_[p*n+q] = (p <= q)
};

// every partial order with a maximum on carriers 1..max_size, top included,
// enumerated by brute force over relation matrices
std::vector<FinitePoset> topped_poset_catalog(int max_size);

}  // namespace cohenlab
