#include "cohenlab/iteration.hpp"

#include <algorithm>

#include "cohenlab/errors.hpp"
#include "cohenlab/rng.hpp"

namespace cohenlab {

DictionaryRule identity_rule(int lambda, std::size_t max_len) {
  return [lambda, max_len](const StageFilters&) {
    return DictionaryMany::identity(lambda, max_len);
  };
}

DictionaryRule bitflip_rule(int lambda, std::size_t max_len) {
  return [lambda, max_len](const StageFilters&) {
    return DictionaryMany::bitflip(lambda, max_len);
  };
}

std::uint64_t filters_digest(const StageFilters& filters) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& f : filters) {
    for (const auto& c : f.elems) {
      h = fnv1a64(many_repr(c), h);
      h = fnv1a64(";", h);
    }
    h = fnv1a64("|", h);
  }
  return h;
}

DictionaryRule seeded_hash_rule(std::uint64_t base_seed, int lambda,
                                std::size_t max_len, std::size_t window) {
  return [base_seed, lambda, max_len, window](const StageFilters& earlier) {
    const std::uint64_t seed = base_seed ^ filters_digest(earlier);
    return DictionaryMany::seeded(seed, lambda, max_len, window);
  };
}

DictionaryRule rule_from_name(const std::string& name, std::uint64_t seed,
                              int lambda, std::size_t max_len,
                              std::size_t window) {
  if (name == "identity") return identity_rule(lambda, max_len);
  if (name == "bitflip") return bitflip_rule(lambda, max_len);
  if (name == "seeded") return seeded_hash_rule(seed, lambda, max_len, window);
  throw MalformedCondition("unknown dictionary rule: " + name);
}

IterationGeneric assemble_iteration(const std::vector<StageSpec>& stages,
                                    const ProductGeneric& g) {
  if (g.per_stage.size() != stages.size())
    throw MalformedCondition("product generic arity differs from stage count");
  IterationGeneric out;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageSpec& st = stages[i];
    const DictionaryMany d = st.dictionary_rule(out.per_stage);
    const auto pi = make_lambda_projection(d, st.lambda, st.max_len);
    FilterSet<ManyCondition> j = pushforward(pi, g.per_stage[i]);

    StageTrace tr;
    tr.stage_id = st.stage_id;
    tr.dictionary_digest = d.digest();
    tr.filter_size = j.size();
    for (std::size_t k = 0; k < st.dense_family.size(); ++k) {
      bool met = false;
      for (const auto& c : j.elems)
        if (st.dense_family[k].pred(c)) {
          met = true;
          break;
        }
      if (!met) throw StageFailure(i, k);
      ++tr.dense_met;
    }
    out.per_stage.push_back(std::move(j));
    out.trace.push_back(std::move(tr));
  }
  return out;
}

bool ProductPoset::leq(const Cond& p, const Cond& q) const {
  if (p.size() != stages_.size() || q.size() != stages_.size()) return false;
  for (std::size_t i = 0; i < stages_.size(); ++i)
    if (!stages_[i].leq(p[i], q[i])) return false;
  return true;
}

bool ProductPoset::contains(const Cond& c) const {
  if (c.size() != stages_.size()) return false;
  for (std::size_t i = 0; i < stages_.size(); ++i)
    if (!stages_[i].contains(c[i])) return false;
  return true;
}

std::size_t ProductPoset::size_of(const Cond& c) const {
  std::size_t s = 0;
  for (const auto& m : c) s += total_bits(m);
  return s;
}

std::size_t ProductPoset::max_growth(const Cond& c) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < stages_.size(); ++i)
    s += stages_[i].max_growth(c[i]);
  return s;
}

bool ProductPoset::cond_less(const Cond& a, const Cond& b) const {
  const std::size_t sa = size_of(a), sb = size_of(b);
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (a[i] == b[i]) continue;
    return stages_[i].cond_less(a[i], b[i]);
  }
  return false;
}

std::vector<ProductPoset::Cond> ProductPoset::carrier(
    std::size_t bound) const {
  std::vector<Cond> out;
  Cond cur(stages_.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i == stages_.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& m : stages_[i].carrier(left)) {
      cur[i] = m;
      rec(i + 1, left - total_bits(m));
    }
    cur[i] = ManyCondition{};
  };
  rec(0, bound);
  std::sort(out.begin(), out.end(),
            [this](const Cond& a, const Cond& b) { return cond_less(a, b); });
  return out;
}

std::vector<ProductPoset::Cond> ProductPoset::upset(const Cond& c) const {
  std::vector<Cond> out;
  Cond cur(stages_.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == stages_.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& m : stages_[i].upset(c[i])) {
      cur[i] = m;
      rec(i + 1);
    }
    cur[i] = ManyCondition{};
  };
  rec(0);
  return out;
}

std::vector<ProductPoset::Cond> ProductPoset::extensions_exact(
    const Cond& c, std::size_t k) const {
  std::vector<Cond> out;
  Cond cur(stages_.size());
  // distribute the k fresh bits over the stages, earlier stages first
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i == stages_.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const std::size_t cap = std::min(left, stages_[i].max_growth(c[i]));
    for (std::size_t take = 0; take <= cap; ++take) {
      for (const auto& m : stages_[i].extensions_exact(c[i], take)) {
        cur[i] = m;
        rec(i + 1, left - take);
      }
    }
    cur[i] = c[i];
  };
  rec(0, k);
  return out;
}

ProductPoset product_poset(const std::vector<StageSpec>& stages) {
  std::vector<CohenManyPoset> inner;
  inner.reserve(stages.size());
  for (const auto& st : stages) inner.emplace_back(st.lambda, st.max_len);
  return ProductPoset(std::move(inner));
}

ProductBuildResult build_product_generic(const std::vector<StageSpec>& stages,
                                         const SearchLimits& lim) {
  ProductBuildResult out;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageSpec& st = stages[i];
    const DictionaryMany d = st.dictionary_rule(out.assembled.per_stage);
    const auto pi = make_lambda_projection(d, st.lambda, st.max_len);
    const CohenManyPoset ground(st.lambda, st.max_len);

    // walk the dense family on the stage poset, lifting every step; the
    // coded chain then lands inside each projected dense set exactly
    ManyCondition coded;  // bottom so far, image always equals `image`
    ManyCondition image;
    for (std::size_t k = 0; k < st.dense_family.size(); ++k) {
      auto hit =
          find_least_below(pi.cod, image, st.dense_family[k].pred, lim);
      if (!hit) throw StageFailure(i, k);
      if (*hit == image) continue;
      coded = lift_many(d, coded, *hit);
      image = pi.map(coded);
    }

    out.bottoms.push_back(coded);
    FilterSet<ManyCondition> gi = upward_close(ground, {coded});

    // assemble this stage's filter now; later dictionaries consume it
    FilterSet<ManyCondition> j = pushforward(pi, gi);
    StageTrace tr;
    tr.stage_id = st.stage_id;
    tr.dictionary_digest = d.digest();
    tr.filter_size = j.size();
    for (std::size_t k = 0; k < st.dense_family.size(); ++k) {
      bool met = false;
      for (const auto& c : j.elems)
        if (st.dense_family[k].pred(c)) {
          met = true;
          break;
        }
      if (!met) throw StageFailure(i, k);
      ++tr.dense_met;
    }
    out.product.per_stage.push_back(std::move(gi));
    out.assembled.per_stage.push_back(std::move(j));
    out.assembled.trace.push_back(std::move(tr));
  }
  return out;
}

}  // namespace cohenlab
