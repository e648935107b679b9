#pragma once

#include <string>
#include <vector>

#include "cohenlab/errors.hpp"

namespace cohenlab {

// finite binary sequence, one char per bit
using BinSeq = std::string;

inline bool is_binseq(const BinSeq& s) {
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

inline void require_binseq(const BinSeq& s) {
  if (!is_binseq(s)) throw MalformedCondition("not a binary sequence: " + s);
}

// q is an initial segment of p (p carries at least as much information)
inline bool extends(const BinSeq& p, const BinSeq& q) {
  return p.size() >= q.size() && p.compare(0, q.size(), q) == 0;
}

// fixed enumeration order: by length, then lexicographic
inline bool seq_less(const BinSeq& a, const BinSeq& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// all sequences of exactly len, lexicographic
inline std::vector<BinSeq> binseq_of_len(std::size_t len) {
  std::vector<BinSeq> out;
  out.reserve(std::size_t{1} << len);
  BinSeq cur(len, '0');
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == '1') cur[--i] = '0';
    if (i == 0) break;
    cur[i - 1] = '1';
  }
  return out;
}

// all sequences of length <= max_len in enumeration order
inline std::vector<BinSeq> all_binseq(std::size_t max_len) {
  std::vector<BinSeq> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (auto& s : binseq_of_len(len)) out.push_back(std::move(s));
  return out;
}

}  // namespace cohenlab
