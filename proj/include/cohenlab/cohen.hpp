#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cohenlab/binseq.hpp"
#include "cohenlab/errors.hpp"

namespace cohenlab {

// Index convention for all codecs: positions are 0-based, even indices carry
// structural bits (1 = split marker, 0 = filler), odd indices carry payload.
// Block a is the segment strictly between marker a-1 and marker a; block 0
// precedes the first marker.

bool is_split_coded(const BinSeq& p);  // odd length, final bit 1
std::size_t marker_count(const BinSeq& p);

// strict decoder: "" decodes to the empty sequence, anything else must be
// SplitCoded
std::vector<BinSeq> decode_blocks(const BinSeq& p);
// tolerant decoder: bits after the last marker are ignored, so it is total
// on canonical lift witnesses that end in an inert trailing bit
std::vector<BinSeq> decode_blocks_loose(const BinSeq& p);

// parity-aware block append: payload bits go on odd indices (fillers on the
// intervening evens), then a marker on the next even index; an empty payload
// appends a single 1 wherever the string ends
void append_block(BinSeq& s, const BinSeq& payload);

// only the leading block may be empty; later empty blocks are unencodable
BinSeq encode_blocks(const std::vector<BinSeq>& blocks, std::size_t max_len);

// least SplitCoded extension: append "1" at even length, "01" at odd
BinSeq densify(const BinSeq& p, std::size_t max_len);

// finite partial map coordinate -> BinSeq; empty values are identified with
// absent coordinates
using ManyCondition = std::map<int, BinSeq>;

ManyCondition normalized(ManyCondition p);
bool many_leq(const ManyCondition& p, const ManyCondition& q);
void require_many(const ManyCondition& p, int lambda, std::size_t max_len);
std::size_t total_bits(const ManyCondition& p);
std::string many_repr(const ManyCondition& p);

// every value SplitCoded with one shared marker count; the empty map counts
// as marker count 0
bool is_lambda_split(const ManyCondition& p);
std::size_t lambda_gamma(const ManyCondition& p);  // shared marker count

// slice decoding with sentinel erasure: each block's last payload bit is the
// sentinel and is dropped; empty erased values leave the slice's domain
std::vector<ManyCondition> decode_lambda(const ManyCondition& p);

// appends one block per slice on every touched coordinate: real blocks carry
// value + sentinel 0, absent coordinates get the pad block (payload "0"),
// coordinates first seen at slice a are pad-prefixed up to the running
// marker count
ManyCondition encode_lambda(const std::vector<ManyCondition>& slices,
                            const ManyCondition& base, std::size_t max_len);

ManyCondition densify_lambda(const ManyCondition& p, std::size_t max_len);

// ---- poset views ----

// all binary sequences of length < max_len, ordered by end-extension
class CohenOnePoset {
 public:
  using Cond = BinSeq;
  explicit CohenOnePoset(std::size_t max_len) : n_(max_len) {}

  std::size_t max_len() const { return n_; }
  Cond top() const { return {}; }
  bool leq(const Cond& p, const Cond& q) const { return extends(p, q); }
  bool contains(const Cond& c) const { return is_binseq(c) && c.size() < n_; }
  std::size_t size_of(const Cond& c) const { return c.size(); }
  std::size_t max_growth(const Cond& c) const {
    return c.size() + 1 >= n_ ? 0 : n_ - 1 - c.size();
  }
  bool cond_less(const Cond& a, const Cond& b) const { return seq_less(a, b); }
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  std::size_t n_;
};

// dense sub-poset of SplitCoded conditions, with the empty sequence adjoined
// as top
class SplitSubposet {
 public:
  using Cond = BinSeq;
  explicit SplitSubposet(std::size_t max_len) : n_(max_len) {}

  std::size_t max_len() const { return n_; }
  Cond top() const { return {}; }
  bool leq(const Cond& p, const Cond& q) const { return extends(p, q); }
  bool contains(const Cond& c) const {
    return is_binseq(c) && c.size() < n_ && (c.empty() || is_split_coded(c));
  }
  std::size_t size_of(const Cond& c) const { return c.size(); }
  std::size_t max_growth(const Cond& c) const {
    return c.size() + 1 >= n_ ? 0 : n_ - 1 - c.size();
  }
  bool cond_less(const Cond& a, const Cond& b) const { return seq_less(a, b); }
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  std::size_t n_;
};

// dense sub-poset of sequences whose length is a multiple of delta
class MultipleSubposet {
 public:
  using Cond = BinSeq;
  MultipleSubposet(std::size_t delta, std::size_t max_len)
      : d_(delta), n_(max_len) {}

  std::size_t delta() const { return d_; }
  Cond top() const { return {}; }
  bool leq(const Cond& p, const Cond& q) const { return extends(p, q); }
  bool contains(const Cond& c) const {
    return is_binseq(c) && c.size() < n_ && c.size() % d_ == 0;
  }
  std::size_t size_of(const Cond& c) const { return c.size(); }
  std::size_t max_growth(const Cond& c) const {
    return c.size() + 1 >= n_ ? 0 : n_ - 1 - c.size();
  }
  bool cond_less(const Cond& a, const Cond& b) const { return seq_less(a, b); }
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  std::size_t d_;
  std::size_t n_;
};

// normalized partial maps {0..lambda-1} -> BinSeq(< max_len), coordinate-wise
// end-extension, top = empty map
class CohenManyPoset {
 public:
  using Cond = ManyCondition;
  CohenManyPoset(int lambda, std::size_t max_len) : l_(lambda), n_(max_len) {}

  int lambda() const { return l_; }
  std::size_t max_len() const { return n_; }
  Cond top() const { return {}; }
  bool leq(const Cond& p, const Cond& q) const { return many_leq(p, q); }
  bool contains(const Cond& c) const;
  std::size_t size_of(const Cond& c) const { return total_bits(c); }
  std::size_t max_growth(const Cond& c) const;
  bool cond_less(const Cond& a, const Cond& b) const;
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  int l_;
  std::size_t n_;
};

// dense sub-poset of LambdaSplitCoded conditions; the empty map is its own
// top (marker count 0)
class LambdaSubposet {
 public:
  using Cond = ManyCondition;
  LambdaSubposet(int lambda, std::size_t max_len) : inner_(lambda, max_len) {}

  int lambda() const { return inner_.lambda(); }
  std::size_t max_len() const { return inner_.max_len(); }
  Cond top() const { return {}; }
  bool leq(const Cond& p, const Cond& q) const { return many_leq(p, q); }
  bool contains(const Cond& c) const {
    return inner_.contains(c) && is_lambda_split(c);
  }
  std::size_t size_of(const Cond& c) const { return total_bits(c); }
  std::size_t max_growth(const Cond& c) const { return inner_.max_growth(c); }
  bool cond_less(const Cond& a, const Cond& b) const {
    return inner_.cond_less(a, b);
  }
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  CohenManyPoset inner_;
};

// LambdaSplitCoded conditions with per-value length <= len_cap, the carrier
// shape used by the exhaustive lambda sweeps
std::vector<ManyCondition> lambda_carrier_by_value_len(int lambda,
                                                       std::size_t len_cap);

}  // namespace cohenlab
