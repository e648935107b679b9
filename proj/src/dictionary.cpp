#include "cohenlab/dictionary.hpp"

#include <algorithm>

#include "cohenlab/rng.hpp"

namespace cohenlab {

namespace {

BinSeq flipped(const BinSeq& s) {
  BinSeq out = s;
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

}  // namespace

Dictionary Dictionary::identity(std::size_t max_len) {
  Dictionary d;
  d.kind_ = Kind::Identity;
  d.n_ = max_len;
  d.digest_ = "identity";
  return d;
}

Dictionary Dictionary::bitflip(std::size_t max_len) {
  Dictionary d;
  d.kind_ = Kind::Bitflip;
  d.n_ = max_len;
  d.digest_ = "bitflip";
  return d;
}

Dictionary Dictionary::seeded(std::uint64_t seed, std::size_t max_len,
                              std::size_t window) {
  Dictionary d;
  d.kind_ = Kind::Table;
  d.n_ = max_len;
  d.digest_ = "seeded:" + std::to_string(seed) + ":w" + std::to_string(window);
  Rng rng(seed);
  for (std::size_t len = 1; len <= window && len < max_len; ++len) {
    auto in = binseq_of_len(len);
    auto out = in;
    rng.shuffle(out);
    for (std::size_t i = 0; i < in.size(); ++i) {
      d.fwd_[in[i]] = out[i];
      d.inv_[out[i]] = in[i];
    }
  }
  return d;
}

Dictionary Dictionary::from_pairs(
    const std::vector<std::pair<BinSeq, BinSeq>>& pairs, std::size_t max_len) {
  Dictionary d;
  d.kind_ = Kind::Table;
  d.n_ = max_len;
  d.digest_ = "pairs:" + std::to_string(pairs.size());
  std::vector<BinSeq> ins, outs;
  for (const auto& [a, b] : pairs) {
    require_binseq(a);
    require_binseq(b);
    if (a.size() >= max_len || b.size() >= max_len)
      throw BoundExceeded("dictionary pair hits the length bound");
    if (a.empty() != b.empty())
      throw MalformedCondition("dictionary must fix the empty sequence");
    if (d.fwd_.count(a))
      throw MalformedCondition("duplicate dictionary input: " + cond_repr(a));
    d.fwd_[a] = b;
    ins.push_back(a);
    outs.push_back(b);
  }
  std::sort(ins.begin(), ins.end());
  std::sort(outs.begin(), outs.end());
  if (ins != outs)
    throw MalformedCondition(
        "dictionary pairs are not a permutation of their support");
  for (const auto& [a, b] : d.fwd_) d.inv_[b] = a;
  return d;
}

BinSeq Dictionary::fwd(const BinSeq& s) const {
  switch (kind_) {
    case Kind::Identity:
      return s;
    case Kind::Bitflip:
      return flipped(s);
    case Kind::Table: {
      auto it = fwd_.find(s);
      return it == fwd_.end() ? s : it->second;
    }
  }
  return s;
}

BinSeq Dictionary::inv(const BinSeq& s) const {
  switch (kind_) {
    case Kind::Identity:
      return s;
    case Kind::Bitflip:
      return flipped(s);
    case Kind::Table: {
      auto it = inv_.find(s);
      return it == inv_.end() ? s : it->second;
    }
  }
  return s;
}

DictionaryMany DictionaryMany::identity(int lambda, std::size_t max_len) {
  DictionaryMany d;
  d.kind_ = Kind::Identity;
  d.l_ = lambda;
  d.n_ = max_len;
  d.digest_ = "identity";
  return d;
}

DictionaryMany DictionaryMany::bitflip(int lambda, std::size_t max_len) {
  DictionaryMany d;
  d.kind_ = Kind::Bitflip;
  d.l_ = lambda;
  d.n_ = max_len;
  d.digest_ = "bitflip";
  return d;
}

DictionaryMany DictionaryMany::seeded(std::uint64_t seed, int lambda,
                                      std::size_t max_len,
                                      std::size_t window) {
  DictionaryMany d;
  d.kind_ = Kind::Coordwise;
  d.l_ = lambda;
  d.n_ = max_len;
  d.digest_ = "seeded:" + std::to_string(seed) + ":w" + std::to_string(window);
  Rng rng(seed);
  d.coord_.reserve(static_cast<std::size_t>(lambda));
  for (int c = 0; c < lambda; ++c)
    d.coord_.push_back(Dictionary::seeded(rng.next(), max_len, window));
  return d;
}

DictionaryMany DictionaryMany::from_pairs(
    const std::vector<std::pair<ManyCondition, ManyCondition>>& pairs,
    int lambda, std::size_t max_len) {
  DictionaryMany d;
  d.kind_ = Kind::Table;
  d.l_ = lambda;
  d.n_ = max_len;
  d.digest_ = "pairs:" + std::to_string(pairs.size());
  std::vector<ManyCondition> ins, outs;
  for (const auto& [a, b] : pairs) {
    ManyCondition na = normalized(a), nb = normalized(b);
    require_many(na, lambda, max_len);
    require_many(nb, lambda, max_len);
    if (na.empty() != nb.empty())
      throw MalformedCondition("dictionary must fix the empty map");
    if (d.fwd_.count(na))
      throw MalformedCondition("duplicate dictionary input: " + many_repr(na));
    d.fwd_[na] = nb;
    ins.push_back(na);
    outs.push_back(nb);
  }
  std::sort(ins.begin(), ins.end());
  std::sort(outs.begin(), outs.end());
  if (ins != outs)
    throw MalformedCondition(
        "dictionary pairs are not a permutation of their support");
  for (const auto& [a, b] : d.fwd_) d.inv_[b] = a;
  return d;
}

ManyCondition DictionaryMany::fwd(const ManyCondition& p) const {
  switch (kind_) {
    case Kind::Identity:
      return p;
    case Kind::Bitflip: {
      ManyCondition out = p;
      for (auto& [beta, v] : out) v = flipped(v);
      return out;
    }
    case Kind::Table: {
      auto it = fwd_.find(p);
      return it == fwd_.end() ? p : it->second;
    }
    case Kind::Coordwise: {
      ManyCondition out;
      for (const auto& [beta, v] : p) {
        const auto i = static_cast<std::size_t>(beta);
        out[beta] = i < coord_.size() ? coord_[i].fwd(v) : v;
      }
      return out;
    }
  }
  return p;
}

ManyCondition DictionaryMany::inv(const ManyCondition& p) const {
  switch (kind_) {
    case Kind::Identity:
      return p;
    case Kind::Bitflip: {
      ManyCondition out = p;
      for (auto& [beta, v] : out) v = flipped(v);
      return out;
    }
    case Kind::Table: {
      auto it = inv_.find(p);
      return it == inv_.end() ? p : it->second;
    }
    case Kind::Coordwise: {
      ManyCondition out;
      for (const auto& [beta, v] : p) {
        const auto i = static_cast<std::size_t>(beta);
        out[beta] = i < coord_.size() ? coord_[i].inv(v) : v;
      }
      return out;
    }
  }
  return p;
}

BinSeq project_one(const Dictionary& d, const BinSeq& p) {
  BinSeq out;
  for (const auto& block : decode_blocks_loose(p)) out += d.fwd(block);
  if (out.size() >= d.max_len())
    throw BoundExceeded("projected condition hits the length bound");
  return out;
}

BinSeq lift_one(const Dictionary& d, const BinSeq& p, const BinSeq& q) {
  require_binseq(q);
  BinSeq image = project_one(d, p);
  if (!extends(q, image))
    throw NotBelow("q does not extend the projected image");
  BinSeq z = q.substr(image.size());
  BinSeq out = p;
  append_block(out, d.inv(z));
  if (out.size() >= d.max_len())
    throw BoundExceeded("lifted condition hits the length bound");
  return out;
}

ManyCondition project_many(const DictionaryMany& d, const ManyCondition& p) {
  ManyCondition out;
  for (const auto& slice : decode_lambda(p)) {
    ManyCondition image = d.fwd(slice);
    for (const auto& [beta, v] : image) out[beta] += v;
  }
  out = normalized(std::move(out));
  for (const auto& [beta, v] : out)
    if (v.size() >= d.max_len())
      throw BoundExceeded("projected coordinate hits the length bound");
  return out;
}

ManyCondition lift_many(const DictionaryMany& d, const ManyCondition& p,
                        const ManyCondition& q) {
  ManyCondition image = project_many(d, p);
  ManyCondition qq = normalized(q);
  if (!many_leq(qq, image))
    throw NotBelow("q does not extend the projected image");
  ManyCondition z;
  for (const auto& [beta, v] : qq) {
    auto it = image.find(beta);
    std::size_t have = it == image.end() ? 0 : it->second.size();
    if (v.size() > have) z[beta] = v.substr(have);
  }
  if (z.empty()) return p;
  return encode_lambda({d.inv(z)}, p, d.max_len());
}

Projection<SplitSubposet, CohenOnePoset> make_split_projection(
    const Dictionary& d, std::size_t max_len) {
  Projection<SplitSubposet, CohenOnePoset> pi{
      SplitSubposet(max_len),
      CohenOnePoset(max_len),
      [d](const BinSeq& p) { return project_one(d, p); },
      [d](const BinSeq& p, const BinSeq& q) { return lift_one(d, p, q); },
      true,
      "split[" + d.digest() + "]"};
  return pi;
}

Projection<LambdaSubposet, CohenManyPoset> make_lambda_projection(
    const DictionaryMany& d, int lambda, std::size_t max_len) {
  Projection<LambdaSubposet, CohenManyPoset> pi{
      LambdaSubposet(lambda, max_len),
      CohenManyPoset(lambda, max_len),
      [d](const ManyCondition& p) { return project_many(d, p); },
      [d](const ManyCondition& p, const ManyCondition& q) {
        return lift_many(d, p, q);
      },
      true,
      "lambda[" + d.digest() + "]"};
  return pi;
}

}  // namespace cohenlab
