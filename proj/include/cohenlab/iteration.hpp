#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cohenlab/cohen.hpp"
#include "cohenlab/dictionary.hpp"
#include "cohenlab/order.hpp"
#include "cohenlab/projection.hpp"

namespace cohenlab {

using StageFilters = std::vector<FilterSet<ManyCondition>>;
// earlier assembled stage filters -> this stage's dictionary
using DictionaryRule = std::function<DictionaryMany(const StageFilters&)>;

DictionaryRule identity_rule(int lambda, std::size_t max_len);
DictionaryRule bitflip_rule(int lambda, std::size_t max_len);
// seed of the dictionary = base_seed mixed with a hash of the canonical
// serialization of every earlier filter, so later stages depend on the
// actual assembled generics
DictionaryRule seeded_hash_rule(std::uint64_t base_seed, int lambda,
                                std::size_t max_len, std::size_t window = 6);
// selector: "identity" | "bitflip" | "seeded"
DictionaryRule rule_from_name(const std::string& name, std::uint64_t seed,
                              int lambda, std::size_t max_len,
                              std::size_t window = 6);

std::uint64_t filters_digest(const StageFilters& filters);

// one stage of a finite generalized Cohen iteration: the stage poset lives
// on bounded coordinate maps, its projection dictionary may depend on every
// earlier stage's assembled filter
struct StageSpec {
  std::size_t stage_id = 0;
  int lambda = 1;
  std::size_t max_len = 64;
  DictionaryRule dictionary_rule;
  // dense sets on the stage poset (the projection codomain, where the
  // assembled filter lives)
  std::vector<DenseSet<ManyCondition>> dense_family;
};

// one filter per stage on the ground coordinate poset; conditions with
// uncoded values included, since the closure is taken in the ambient order
struct ProductGeneric {
  StageFilters per_stage;
};

struct StageTrace {
  std::size_t stage_id = 0;
  std::string dictionary_digest;
  std::size_t filter_size = 0;
  std::size_t dense_met = 0;
};

struct IterationGeneric {
  StageFilters per_stage;  // assembled J_i on the stage posets
  std::vector<StageTrace> trace;
};

// pure: stage i uses dictionary_rule(J_0..J_{i-1}), projects the coded
// sub-poset onto the stage poset, and pushes G.per_stage[i] forward; throws
// StageFailure(i, j) when J_i misses dense_family[j]
IterationGeneric assemble_iteration(const std::vector<StageSpec>& stages,
                                    const ProductGeneric& g);

// finite-support product of the stage coordinate posets, ordered entrywise
class ProductPoset {
 public:
  using Cond = std::vector<ManyCondition>;
  explicit ProductPoset(std::vector<CohenManyPoset> stages)
      : stages_(std::move(stages)) {}

  std::size_t arity() const { return stages_.size(); }
  const CohenManyPoset& stage(std::size_t i) const { return stages_[i]; }

  Cond top() const { return Cond(stages_.size()); }
  bool leq(const Cond& p, const Cond& q) const;
  bool contains(const Cond& c) const;
  std::size_t size_of(const Cond& c) const;
  std::size_t max_growth(const Cond& c) const;
  bool cond_less(const Cond& a, const Cond& b) const;
  std::vector<Cond> carrier(std::size_t bound) const;
  std::vector<Cond> upset(const Cond& c) const;
  std::vector<Cond> extensions_exact(const Cond& c, std::size_t k) const;

 private:
  std::vector<CohenManyPoset> stages_;
};

ProductPoset product_poset(const std::vector<StageSpec>& stages);

// deterministic product-generic builder: per stage, walk the dense family
// on the stage poset by least extensions and lift each step through the
// stage projection, so the chain meets every projected dense set by
// construction; stages are sequential because later dictionaries consume
// earlier assembled filters
struct ProductBuildResult {
  ProductGeneric product;
  std::vector<ManyCondition> bottoms;  // coded chain bottom per stage
  IterationGeneric assembled;          // the J's the build already implies
};

ProductBuildResult build_product_generic(const std::vector<StageSpec>& stages,
                                         const SearchLimits& lim = {});

}  // namespace cohenlab
