#include "cohenlab/json_io.hpp"

#include <algorithm>

#include "cohenlab/errors.hpp"

namespace cohenlab {

BinSeq binseq_from_json(const Json& j) {
  if (!j.is_string())
    throw MalformedCondition("expected a 0/1 string, got " + j.dump());
  BinSeq s = j.get<std::string>();
  require_binseq(s);
  return s;
}

Json many_to_json(const ManyCondition& p) {
  Json out = Json::object();
  for (const auto& [coord, bits] : p) out[std::to_string(coord)] = bits;
  return out;
}

ManyCondition many_from_json(const Json& j) {
  if (!j.is_object())
    throw MalformedCondition("expected an object of coordinate strings");
  ManyCondition p;
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    int coord = 0;
    try {
      coord = std::stoi(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || coord < 0)
      throw MalformedCondition("bad coordinate key: " + key);
    if (!value.is_string())
      throw MalformedCondition("coordinate " + key + " is not a string");
    BinSeq bits = value.get<std::string>();
    require_binseq(bits);
    p[coord] = std::move(bits);
  }
  return normalized(std::move(p));
}

Json term_to_json(const TermCondition& q) {
  Json out = Json::array();
  for (const Antichain& a : q) out.push_back(a);
  return out;
}

TermCondition term_from_json(const Json& j) {
  if (!j.is_array())
    throw MalformedCondition("expected an array of index arrays");
  TermCondition q;
  for (const auto& entry : j) {
    if (!entry.is_array())
      throw MalformedCondition("term entry is not an index array");
    Antichain a;
    for (const auto& x : entry) {
      if (!x.is_number_integer())
        throw MalformedCondition("antichain member is not an integer");
      a.push_back(x.get<int>());
    }
    q.push_back(std::move(a));
  }
  return q;
}

FinitePoset finite_poset_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedCondition("expected a poset object");
  int size = 0;
  std::vector<std::string> labels;
  if (j.contains("size")) {
    size = j.at("size").get<int>();
  } else if (j.contains("carrier")) {
    const Json& c = j.at("carrier");
    if (c.is_number_integer()) {
      size = c.get<int>();
    } else if (c.is_array()) {
      size = static_cast<int>(c.size());
      for (const auto& x : c)
        labels.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    } else {
      throw MalformedCondition("carrier must be a count or a label list");
    }
  } else {
    throw MalformedCondition("poset object needs size or carrier");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : j.value("leq_pairs", Json::array())) {
    if (!pr.is_array() || pr.size() != 2)
      throw MalformedCondition("leq pair must be [below, above]");
    pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  }
  if (!j.contains("top")) throw MalformedCondition("poset object needs top");
  FinitePoset p(size, pairs, j.at("top").get<int>());
  p.labels = std::move(labels);
  return p;
}

Json finite_poset_to_json(const FinitePoset& p) {
  Json pairs = Json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) pairs.push_back(Json::array({a, b}));
  Json out = Json::object();
  out["size"] = p.size();
  out["leq_pairs"] = std::move(pairs);
  out["top"] = p.top();
  return out;
}

Dictionary dictionary_by_name(const std::string& name, std::uint64_t seed,
                              std::size_t max_len, std::size_t window) {
  if (name == "identity") return Dictionary::identity(max_len);
  if (name == "bitflip") return Dictionary::bitflip(max_len);
  if (name == "seeded") return Dictionary::seeded(seed, max_len, window);
  throw MalformedCondition("unknown dictionary name: " + name);
}

DictionaryMany dictionary_many_by_name(const std::string& name,
                                       std::uint64_t seed, int lambda,
                                       std::size_t max_len,
                                       std::size_t window) {
  if (name == "identity") return DictionaryMany::identity(lambda, max_len);
  if (name == "bitflip") return DictionaryMany::bitflip(lambda, max_len);
  if (name == "seeded")
    return DictionaryMany::seeded(seed, lambda, max_len, window);
  throw MalformedCondition("unknown dictionary name: " + name);
}

Dictionary dictionary_from_json(const Json& j, std::size_t max_len,
                                std::uint64_t seed) {
  if (j.is_string()) return dictionary_by_name(j.get<std::string>(), seed, max_len);
  if (!j.is_object()) throw MalformedCondition("expected a dictionary object");
  if (j.contains("pairs")) {
    std::vector<std::pair<BinSeq, BinSeq>> pairs;
    for (const auto& pr : j.at("pairs")) {
      if (!pr.is_array() || pr.size() != 2)
        throw MalformedCondition("dictionary pair must be [in, out]");
      pairs.emplace_back(binseq_from_json(pr[0]), binseq_from_json(pr[1]));
    }
    return Dictionary::from_pairs(pairs, max_len);
  }
  if (j.contains("name"))
    return dictionary_by_name(j.at("name").get<std::string>(),
                              j.value("seed", seed), max_len,
                              j.value("window", std::size_t{6}));
  throw MalformedCondition("dictionary object needs pairs or name");
}

FiniteModelPair model_pair_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedCondition("expected a model pair object");
  const int universe = j.at("universe").get<int>();
  const std::size_t delta = j.at("delta").get<std::size_t>();
  auto family = [universe](const Json& arr) {
    std::vector<SetMask> out;
    for (const auto& s : arr) {
      std::vector<int> members;
      for (const auto& x : s) members.push_back(x.get<int>());
      out.push_back(set_to_mask(members, universe));
    }
    return out;
  };
  return FiniteModelPair::make(universe, delta, family(j.at("W")),
                               family(j.at("V")));
}

Json model_pair_to_json(const FiniteModelPair& m) {
  auto family = [](const std::vector<SetMask>& f) {
    Json arr = Json::array();
    for (SetMask a : f) arr.push_back(mask_to_set(a));
    return arr;
  };
  Json out = Json::object();
  out["universe"] = m.universe;
  out["delta"] = m.delta;
  out["W"] = family(m.w_family);
  out["V"] = family(m.v_family);
  return out;
}

namespace {

Json canonical(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

DenseSet<BinSeq> seq_dense_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw MalformedCondition("dense descriptor needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string desc = canonical(j).dump();
  if (kind == "min_len") {
    const std::size_t k = j.at("k").get<std::size_t>();
    return {[k](const BinSeq& p) { return p.size() >= k; }, desc};
  }
  if (kind == "ends_with") {
    const BinSeq bits = binseq_from_json(j.at("bits"));
    return {[bits](const BinSeq& p) {
              return p.size() >= bits.size() &&
                     p.compare(p.size() - bits.size(), bits.size(), bits) == 0;
            },
            desc};
  }
  if (kind == "contains") {
    const BinSeq bits = binseq_from_json(j.at("bits"));
    return {[bits](const BinSeq& p) { return p.find(bits) != BinSeq::npos; },
            desc};
  }
  if (kind == "len_mod") {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t r = j.at("r").get<std::size_t>();
    if (m == 0 || r >= m) throw MalformedCondition("bad len_mod parameters");
    return {[m, r](const BinSeq& p) { return p.size() % m == r; }, desc};
  }
  if (kind == "ones_mod") {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t r = j.at("r").get<std::size_t>();
    if (m == 0 || r >= m) throw MalformedCondition("bad ones_mod parameters");
    return {[m, r](const BinSeq& p) {
              return static_cast<std::size_t>(
                         std::count(p.begin(), p.end(), '1')) %
                         m ==
                     r;
            },
            desc};
  }
  if (kind == "explicit") {
    std::vector<BinSeq> members;
    for (const auto& x : j.at("members")) members.push_back(binseq_from_json(x));
    std::sort(members.begin(), members.end());
    return {[members](const BinSeq& p) {
              return std::binary_search(members.begin(), members.end(), p);
            },
            desc};
  }
  throw MalformedCondition("unknown dense descriptor kind: " + kind);
}

DenseSet<ManyCondition> many_dense_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw MalformedCondition("dense descriptor needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string desc = canonical(j).dump();
  if (kind == "total_min") {
    const std::size_t k = j.at("k").get<std::size_t>();
    return {[k](const ManyCondition& p) { return total_bits(p) >= k; }, desc};
  }
  if (kind == "coord_defined") {
    const int c = j.at("coord").get<int>();
    return {[c](const ManyCondition& p) { return p.count(c) != 0; }, desc};
  }
  if (kind == "coord_len") {
    const int c = j.at("coord").get<int>();
    const std::size_t k = j.at("k").get<std::size_t>();
    return {[c, k](const ManyCondition& p) {
              auto it = p.find(c);
              return it != p.end() && it->second.size() >= k;
            },
            desc};
  }
  if (kind == "coord_ends") {
    const int c = j.at("coord").get<int>();
    const BinSeq bit = binseq_from_json(j.at("bit"));
    if (bit.size() != 1) throw MalformedCondition("coord_ends wants one bit");
    return {[c, bit](const ManyCondition& p) {
              auto it = p.find(c);
              return it != p.end() && !it->second.empty() &&
                     it->second.back() == bit[0];
            },
            desc};
  }
  if (kind == "total_mod") {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t r = j.at("r").get<std::size_t>();
    if (m == 0 || r >= m) throw MalformedCondition("bad total_mod parameters");
    return {[m, r](const ManyCondition& p) { return total_bits(p) % m == r; },
            desc};
  }
  throw MalformedCondition("unknown dense descriptor kind: " + kind);
}

Json random_seq_dense_json(Rng& rng) {
  Json j = Json::object();
  switch (rng.below(10)) {
    case 0:
    case 1:
    case 2:
      j["kind"] = "min_len";
      j["k"] = 1 + rng.below(3);
      break;
    case 3:
    case 4:
      j["kind"] = "ends_with";
      j["bits"] = rng.coin() ? "1" : "0";
      break;
    case 5:
    case 6:
      j["kind"] = "contains";
      j["bits"] = rng.coin() ? "1" : "0";
      break;
    case 7:
    case 8:
      j["kind"] = "len_mod";
      j["m"] = 2;
      j["r"] = rng.below(2);
      break;
    default:
      j["kind"] = "ones_mod";
      j["m"] = 2;
      j["r"] = rng.below(2);
      break;
  }
  return j;
}

Json random_many_dense_json(Rng& rng, int lambda) {
  Json j = Json::object();
  const auto coord = [&] {
    return static_cast<int>(rng.below(static_cast<std::uint64_t>(lambda)));
  };
  switch (rng.below(10)) {
    case 0:
    case 1:
    case 2:
      j["kind"] = "total_min";
      j["k"] = 1 + rng.below(4);
      break;
    case 3:
    case 4:
      j["kind"] = "coord_defined";
      j["coord"] = coord();
      break;
    case 5:
    case 6:
      j["kind"] = "coord_len";
      j["coord"] = coord();
      j["k"] = 1 + rng.below(2);
      break;
    case 7:
    case 8:
      j["kind"] = "coord_ends";
      j["coord"] = coord();
      j["bit"] = rng.coin() ? "1" : "0";
      break;
    default:
      j["kind"] = "total_mod";
      j["m"] = 2;
      j["r"] = rng.below(2);
      break;
  }
  return j;
}

FiniteModelPair random_model_pair(Rng& rng, int max_universe) {
  const int u = 1 + static_cast<int>(rng.below(max_universe));
  const std::size_t delta = 1 + rng.below(3);
  const SetMask full = (SetMask{1} << u) - 1u;
  std::vector<SetMask> w, v;
  w.push_back(0);
  for (int i = 0; i < u; ++i) w.push_back(SetMask{1} << i);
  for (SetMask a = 0; a <= full; ++a) {
    const auto roll = rng.below(4);
    if (roll == 0) w.push_back(a);
    if (roll <= 1) v.push_back(a);
  }
  for (SetMask a : w) v.push_back(a);
  return FiniteModelPair::make(u, delta, std::move(w), std::move(v));
}

Json report_to_json(const VerificationReport& rep) {
  Json viols = Json::array();
  for (const auto& v : rep.violations) {
    Json one = Json::object();
    one["kind"] = v.kind;
    one["detail"] = v.detail;
    viols.push_back(std::move(one));
  }
  Json out = Json::object();
  out["violations"] = std::move(viols);
  out["order_pairs_checked"] = rep.order_pairs_checked;
  out["lift_pairs_checked"] = rep.lift_pairs_checked;
  return out;
}

Json verdict_to_json(const ApproxVerdict& v) {
  Json out = Json::object();
  out["verdict"] = v.holds ? "holds" : "counterexample";
  if (v.counterexample) out["witness"] = mask_to_set(*v.counterexample);
  return out;
}

}  // namespace cohenlab
