#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cohenlab/binseq.hpp"
#include "cohenlab/cohen.hpp"
#include "cohenlab/finite_poset.hpp"
#include "cohenlab/order.hpp"
#include "cohenlab/projection.hpp"

namespace cohenlab {

// sorted index set, pairwise incompatible in its poset; the empty antichain
// is admitted
using Antichain = std::vector<int>;
// finite sequence of antichains, a nice name for a binary sequence
using TermCondition = std::vector<Antichain>;

std::string term_repr(const TermCondition& q);

bool is_antichain(const FinitePoset& p, const Antichain& a);
// every antichain, enumerated by subset mask ascending
std::vector<Antichain> all_antichains(const FinitePoset& p);

// atoms of p reachable from below some member of a, as a carrier bitmask
std::uint32_t atom_coverage(const FinitePoset& p, const Antichain& a);

// two antichains are equivalent when every atom-generated filter meets one
// iff it meets the other; over a finite poset that is coverage equality
bool equiv(const FinitePoset& p, const Antichain& a, const Antichain& b);

// len(p) >= len(q) and entrywise equivalence on the common prefix
bool term_leq(const FinitePoset& p, const TermCondition& a,
              const TermCondition& b);

struct AntichainLabeler {
  std::function<int(const Antichain&)> label;
  std::string desc;
};

// label 1 exactly when the coverage is all atoms; onto and class-constant
AntichainLabeler default_labeler(const FinitePoset& p);

BinSeq term_to_cohen(const FinitePoset& p, const AntichainLabeler& d,
                     const TermCondition& q);

// extends p by the canonical antichain per fresh bit: empty set for 0,
// {top} for 1
TermCondition lift_term(const FinitePoset& p, const AntichainLabeler& d,
                        const TermCondition& cond, const BinSeq& q);

// chops bits into size-delta blocks; a block codes its bit-selected subset
// when that subset is an antichain, otherwise the empty antichain
TermCondition cohen_to_term(const FinitePoset& p, const BinSeq& bits);

// bit b records whether g meets the b-th antichain
BinSeq eval_name(const FinitePoset& p, const TermCondition& q,
                 const FilterSet<int>& g);

// upward closure in the codomain Cohen poset of the evaluations of h's
// members; a filter whenever g is atom-generated (eval is then monotone)
FilterSet<BinSeq> term_transfer(const FinitePoset& p,
                                const FilterSet<TermCondition>& h,
                                const FilterSet<int>& g, std::size_t max_len);

FilterSet<int> atom_filter(const FinitePoset& p, int atom);

// the term forcing over p: sequences of antichains of length < n_max under
// term_leq; a preorder, since equivalent entries give mutual extension
class TermPoset {
 public:
  using Cond = TermCondition;
  TermPoset(FinitePoset base, std::size_t n_max);

  const FinitePoset& base() const { return base_; }
  const std::vector<Antichain>& antichains() const { return antichains_; }
  std::size_t rank_of(const Antichain& a) const;
  const std::vector<Antichain>& class_of(const Antichain& a) const;

  Cond top() const { return {}; }
  bool leq(const Cond& a, const Cond& b) const {
    return term_leq(base_, a, b);
  }
  bool contains(const Cond& c) const;
  std::size_t size_of(const Cond& c) const { return c.size(); }
  std::size_t max_growth(const Cond& c) const {
    return c.size() + 1 >= n_max_ ? 0 : n_max_ - 1 - c.size();
  }
  bool cond_less(const Cond& a, const Cond& b) const;
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  FinitePoset base_;
  std::size_t n_max_;
  std::vector<Antichain> antichains_;
  std::vector<std::uint32_t> coverage_;              // by antichain rank
  std::vector<std::vector<Antichain>> class_lists_;  // by antichain rank
};

Projection<TermPoset, CohenOnePoset> make_term_projection(
    const FinitePoset& p, const AntichainLabeler& d, std::size_t n_max,
    std::size_t max_len);

// the reverse direction: from the multiple-of-delta dense sub-poset onto
// the term poset; the witness reaches q up to equivalence, so it promises
// <= rather than equality
Projection<MultipleSubposet, TermPoset> make_cohen_term_projection(
    const FinitePoset& p, std::size_t n_max, std::size_t max_len);

// {q : every atom-generated evaluation of q lands in D}
DenseSet<TermCondition> translate_dense(const FinitePoset& p,
                                        const DenseSet<BinSeq>& d);

}  // namespace cohenlab
