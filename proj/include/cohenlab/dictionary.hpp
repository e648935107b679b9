#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohenlab/cohen.hpp"
#include "cohenlab/projection.hpp"

namespace cohenlab {

// total bijection on bounded binary sequences fixing the empty sequence;
// table-backed permutations act on a finite support and are the identity
// beyond it, so the map stays total and pointwise computable at any bound
class Dictionary {
 public:
  static Dictionary identity(std::size_t max_len);
  static Dictionary bitflip(std::size_t max_len);
  // seeded shuffle within each length class up to window
  static Dictionary seeded(std::uint64_t seed, std::size_t max_len,
                           std::size_t window = 6);
  // pairs must form a permutation of their own support, fixing ""
  static Dictionary from_pairs(
      const std::vector<std::pair<BinSeq, BinSeq>>& pairs,
      std::size_t max_len);

  BinSeq fwd(const BinSeq& s) const;
  BinSeq inv(const BinSeq& s) const;
  const std::string& digest() const { return digest_; }
  std::size_t max_len() const { return n_; }

 private:
  enum class Kind { Identity, Bitflip, Table };
  Kind kind_ = Kind::Identity;
  std::size_t n_ = 0;
  std::map<BinSeq, BinSeq> fwd_, inv_;
  std::string digest_;
};

// the same idea over normalized ManyCondition values; built-in scrambles act
// coordinate by coordinate so the slice map commutes with dropping
// coordinates, which is what keeps the induced projection order-preserving
class DictionaryMany {
 public:
  static DictionaryMany identity(int lambda, std::size_t max_len);
  static DictionaryMany bitflip(int lambda, std::size_t max_len);
  // independent per-coordinate shuffles within each length class up to window
  static DictionaryMany seeded(std::uint64_t seed, int lambda,
                               std::size_t max_len, std::size_t window = 6);
  static DictionaryMany from_pairs(
      const std::vector<std::pair<ManyCondition, ManyCondition>>& pairs,
      int lambda, std::size_t max_len);

  ManyCondition fwd(const ManyCondition& p) const;
  ManyCondition inv(const ManyCondition& p) const;
  const std::string& digest() const { return digest_; }
  int lambda() const { return l_; }
  std::size_t max_len() const { return n_; }

 private:
  enum class Kind { Identity, Bitflip, Table, Coordwise };
  Kind kind_ = Kind::Identity;
  int l_ = 0;
  std::size_t n_ = 0;
  std::map<ManyCondition, ManyCondition> fwd_, inv_;
  std::vector<Dictionary> coord_;
  std::string digest_;
};

// concatenation of dictionary images of the decoded blocks
BinSeq project_one(const Dictionary& d, const BinSeq& p);

// canonical lifting witness: append the single block coding the inverse
// image of the fresh part of q; always a strict extension
BinSeq lift_one(const Dictionary& d, const BinSeq& p, const BinSeq& q);

// coordinate-wise concatenation of dictionary images of the slices
ManyCondition project_many(const DictionaryMany& d, const ManyCondition& p);

// canonical witness: encode the inverse image of the fresh part of q as one
// appended slice; returns p unchanged when the fresh part is empty
ManyCondition lift_many(const DictionaryMany& d, const ManyCondition& p,
                        const ManyCondition& q);

Projection<SplitSubposet, CohenOnePoset> make_split_projection(
    const Dictionary& d, std::size_t max_len);

Projection<LambdaSubposet, CohenManyPoset> make_lambda_projection(
    const DictionaryMany& d, int lambda, std::size_t max_len);

}  // namespace cohenlab
