#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohenlab/approximation.hpp"
#include "cohenlab/cohen.hpp"
#include "cohenlab/dictionary.hpp"
#include "cohenlab/finite_poset.hpp"
#include "cohenlab/order.hpp"
#include "cohenlab/projection.hpp"
#include "cohenlab/rng.hpp"
#include "cohenlab/term.hpp"

namespace cohenlab {

using Json = nlohmann::json;

// ---- conditions ----

BinSeq binseq_from_json(const Json& j);  // "0110"
Json many_to_json(const ManyCondition& p);
ManyCondition many_from_json(const Json& j);  // {"0": "101", ...}
Json term_to_json(const TermCondition& q);    // [[0,2],[1],[]]
TermCondition term_from_json(const Json& j);

// ---- posets / dictionaries / model pairs ----

// {"size": n, "leq_pairs": [[i,j],...], "top": t}; "carrier" (a label list
// or its length) is accepted in place of "size"
FinitePoset finite_poset_from_json(const Json& j);
Json finite_poset_to_json(const FinitePoset& p);

// {"pairs": [["in","out"],...]} or {"name": "identity"|"bitflip"|"seeded"}
Dictionary dictionary_from_json(const Json& j, std::size_t max_len,
                                std::uint64_t seed = 0);
Dictionary dictionary_by_name(const std::string& name, std::uint64_t seed,
                              std::size_t max_len, std::size_t window = 6);
DictionaryMany dictionary_many_by_name(const std::string& name,
                                       std::uint64_t seed, int lambda,
                                       std::size_t max_len,
                                       std::size_t window = 6);

// {"universe": u, "delta": d, "W": [[...],...], "V": [[...],...]}
FiniteModelPair model_pair_from_json(const Json& j);
Json model_pair_to_json(const FiniteModelPair& m);

// ---- dense-set descriptors ----
// named predicate identifiers; every descriptor round-trips through `desc`
//   binary sequences: {"kind":"min_len","k":3} | {"kind":"ends_with",
//   "bits":"1"} | {"kind":"contains","bits":"0"} | {"kind":"len_mod",
//   "m":2,"r":1} | {"kind":"ones_mod","m":2,"r":0} | {"kind":"explicit",
//   "members":[...]}
//   coordinate maps: {"kind":"total_min","k":4} | {"kind":"coord_defined",
//   "coord":1} | {"kind":"coord_len","coord":0,"k":2} | {"kind":
//   "coord_ends","coord":0,"bit":"1"} | {"kind":"total_mod","m":2,"r":1}
DenseSet<BinSeq> seq_dense_from_json(const Json& j);
DenseSet<ManyCondition> many_dense_from_json(const Json& j);

// seeded descriptor generators used by the trial harnesses; demands are
// kept small so a 15-set family fits the bit budget of a bound-32 chain
Json random_seq_dense_json(Rng& rng);
Json random_many_dense_json(Rng& rng, int lambda);
FiniteModelPair random_model_pair(Rng& rng, int max_universe = 6);

// ---- results ----

template <class Cond>
Json filter_to_json(const FilterSet<Cond>& f);

Json report_to_json(const VerificationReport& rep);
Json verdict_to_json(const ApproxVerdict& v);

template <>
inline Json filter_to_json(const FilterSet<BinSeq>& f) {
  Json out = Json::array();
  for (const auto& c : f.elems) out.push_back(c);
  return out;
}

template <>
inline Json filter_to_json(const FilterSet<ManyCondition>& f) {
  Json out = Json::array();
  for (const auto& c : f.elems) out.push_back(many_to_json(c));
  return out;
}

template <>
inline Json filter_to_json(const FilterSet<TermCondition>& f) {
  Json out = Json::array();
  for (const auto& c : f.elems) out.push_back(term_to_json(c));
  return out;
}

}  // namespace cohenlab
