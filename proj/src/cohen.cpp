#include "cohenlab/cohen.hpp"

#include <algorithm>
#include <functional>

#include "cohenlab/order.hpp"

namespace cohenlab {

bool is_split_coded(const BinSeq& p) {
  return is_binseq(p) && p.size() % 2 == 1 && p.back() == '1';
}

std::size_t marker_count(const BinSeq& p) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < p.size(); i += 2)
    if (p[i] == '1') ++g;
  return g;
}

std::vector<BinSeq> decode_blocks_loose(const BinSeq& p) {
  require_binseq(p);
  std::vector<BinSeq> out;
  BinSeq cur;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 1) {
      cur.push_back(p[i]);
    } else if (p[i] == '1') {
      out.push_back(cur);
      cur.clear();
    }
  }
  return out;  // bits past the last marker stay in cur and are dropped
}

std::vector<BinSeq> decode_blocks(const BinSeq& p) {
  if (p.empty()) return {};
  if (!is_split_coded(p))
    throw MalformedCondition("not SplitCoded: " + cond_repr(p));
  return decode_blocks_loose(p);
}

void append_block(BinSeq& s, const BinSeq& payload) {
  if (payload.empty()) {
    // real empty block when landing on an even index, inert junk otherwise
    s.push_back('1');
    return;
  }
  for (char b : payload) {
    if (s.size() % 2 == 0) s.push_back('0');
    s.push_back(b);
  }
  s.push_back('1');
}

BinSeq encode_blocks(const std::vector<BinSeq>& blocks, std::size_t max_len) {
  BinSeq out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    require_binseq(blocks[i]);
    if (i > 0 && blocks[i].empty())
      throw MalformedCondition("only the leading block may be empty");
    append_block(out, blocks[i]);
    if (out.size() >= max_len)
      throw BoundExceeded("encoded condition hits the length bound");
  }
  return out;
}

BinSeq densify(const BinSeq& p, std::size_t max_len) {
  require_binseq(p);
  BinSeq out = p;
  if (p.size() % 2 == 0)
    out += "1";
  else
    out += "01";
  if (out.size() >= max_len)
    throw BoundExceeded("densified condition hits the length bound");
  return out;
}

ManyCondition normalized(ManyCondition p) {
  for (auto it = p.begin(); it != p.end();)
    it = it->second.empty() ? p.erase(it) : std::next(it);
  return p;
}

bool many_leq(const ManyCondition& p, const ManyCondition& q) {
  for (const auto& [beta, v] : q) {
    auto it = p.find(beta);
    if (it == p.end() || !extends(it->second, v)) return false;
  }
  return true;
}

void require_many(const ManyCondition& p, int lambda, std::size_t max_len) {
  for (const auto& [beta, v] : p) {
    if (beta < 0 || beta >= lambda)
      throw MalformedCondition("coordinate out of range: " +
                               std::to_string(beta));
    require_binseq(v);
    if (v.empty())
      throw MalformedCondition("empty value survived normalization");
    if (v.size() >= max_len)
      throw BoundExceeded("coordinate value hits the length bound");
  }
}

std::size_t total_bits(const ManyCondition& p) {
  std::size_t t = 0;
  for (const auto& [beta, v] : p) t += v.size();
  return t;
}

std::string many_repr(const ManyCondition& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [beta, v] : p) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(beta) + ":" + v;
  }
  return out + "}";
}

bool is_lambda_split(const ManyCondition& p) {
  std::size_t g = 0;
  bool first = true;
  for (const auto& [beta, v] : p) {
    if (!is_split_coded(v)) return false;
    std::size_t m = marker_count(v);
    if (first) {
      g = m;
      first = false;
    } else if (m != g) {
      return false;
    }
  }
  return true;
}

std::size_t lambda_gamma(const ManyCondition& p) {
  if (!is_lambda_split(p))
    throw MalformedCondition("not LambdaSplitCoded: " + many_repr(p));
  return p.empty() ? 0 : marker_count(p.begin()->second);
}

std::vector<ManyCondition> decode_lambda(const ManyCondition& p) {
  std::size_t gamma = lambda_gamma(p);
  std::vector<ManyCondition> slices(gamma);
  for (const auto& [beta, v] : p) {
    auto blocks = decode_blocks(v);
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      BinSeq& w = blocks[a];
      if (!w.empty()) w.pop_back();  // sentinel erasure
      if (!w.empty()) slices[a][beta] = w;
    }
  }
  return slices;
}

ManyCondition encode_lambda(const std::vector<ManyCondition>& slices,
                            const ManyCondition& base, std::size_t max_len) {
  ManyCondition r = normalized(base);
  std::size_t gamma = lambda_gamma(r);
  for (const auto& raw : slices) {
    ManyCondition slice = normalized(raw);
    for (const auto& [beta, v] : slice) require_binseq(v);
    // every coordinate already present gains a block this round
    std::vector<int> touched;
    for (const auto& [beta, v] : r) touched.push_back(beta);
    for (const auto& [beta, v] : slice)
      if (!r.count(beta)) touched.push_back(beta);
    for (int beta : touched) {
      BinSeq s = r.count(beta) ? r[beta] : BinSeq{};
      if (!r.count(beta))  // pad-prefix a fresh coordinate up to gamma
        for (std::size_t t = 0; t < gamma; ++t) append_block(s, "0");
      auto it = slice.find(beta);
      append_block(s, it != slice.end() ? it->second + "0" : BinSeq{"0"});
      if (s.size() >= max_len)
        throw BoundExceeded("coordinate value hits the length bound");
      r[beta] = s;
    }
    ++gamma;
  }
  return r;
}

ManyCondition densify_lambda(const ManyCondition& p, std::size_t max_len) {
  ManyCondition r = normalized(p);
  std::size_t gamma = 0;
  for (auto& [beta, v] : r) {
    v = densify(v, max_len);
    gamma = std::max(gamma, marker_count(v));
  }
  for (auto& [beta, v] : r) {
    for (std::size_t g = marker_count(v); g < gamma; ++g) {
      append_block(v, "0");
      if (v.size() >= max_len)
        throw BoundExceeded("coordinate value hits the length bound");
    }
  }
  return r;
}

// ---- CohenOnePoset ----

std::vector<BinSeq> CohenOnePoset::carrier(std::size_t bound) const {
  return all_binseq(std::min(bound, n_ - 1));
}

std::vector<BinSeq> CohenOnePoset::upset(const Cond& c) const {
  std::vector<Cond> out;
  for (std::size_t len = 0; len <= c.size(); ++len)
    out.push_back(c.substr(0, len));
  return out;
}

std::vector<BinSeq> CohenOnePoset::extensions_exact(const Cond& c,
                                                    std::size_t k) const {
  if (k == 0) return contains(c) ? std::vector<Cond>{c} : std::vector<Cond>{};
  if (c.size() + k >= n_) return {};
  std::vector<Cond> out;
  for (const auto& w : binseq_of_len(k)) out.push_back(c + w);
  return out;
}

// ---- SplitSubposet ----

std::vector<BinSeq> SplitSubposet::carrier(std::size_t bound) const {
  std::vector<Cond> out{{}};
  std::size_t cap = std::min(bound, n_ - 1);
  for (std::size_t len = 1; len <= cap; len += 2)
    for (const auto& u : binseq_of_len(len - 1)) out.push_back(u + "1");
  return out;
}

std::vector<BinSeq> SplitSubposet::upset(const Cond& c) const {
  std::vector<Cond> out{{}};
  for (std::size_t len = 1; len <= c.size(); len += 2)
    if (c[len - 1] == '1') out.push_back(c.substr(0, len));
  return out;
}

std::vector<BinSeq> SplitSubposet::extensions_exact(const Cond& c,
                                                    std::size_t k) const {
  if (k == 0) return contains(c) ? std::vector<Cond>{c} : std::vector<Cond>{};
  if (c.size() + k >= n_ || (c.size() + k) % 2 == 0) return {};
  std::vector<Cond> out;
  for (const auto& u : binseq_of_len(k - 1)) out.push_back(c + u + "1");
  return out;
}

// ---- MultipleSubposet ----

std::vector<BinSeq> MultipleSubposet::carrier(std::size_t bound) const {
  std::vector<Cond> out;
  std::size_t cap = std::min(bound, n_ - 1);
  for (std::size_t len = 0; len <= cap; len += d_)
    for (const auto& u : binseq_of_len(len)) out.push_back(u);
  return out;
}

std::vector<BinSeq> MultipleSubposet::upset(const Cond& c) const {
  std::vector<Cond> out;
  for (std::size_t len = 0; len <= c.size(); len += d_)
    out.push_back(c.substr(0, len));
  return out;
}

std::vector<BinSeq> MultipleSubposet::extensions_exact(const Cond& c,
                                                       std::size_t k) const {
  if (k == 0) return contains(c) ? std::vector<Cond>{c} : std::vector<Cond>{};
  if (c.size() + k >= n_ || k % d_ != 0) return {};
  std::vector<Cond> out;
  for (const auto& w : binseq_of_len(k)) out.push_back(c + w);
  return out;
}

// ---- CohenManyPoset ----

bool CohenManyPoset::contains(const Cond& c) const {
  for (const auto& [beta, v] : c) {
    if (beta < 0 || beta >= l_) return false;
    if (v.empty() || !is_binseq(v) || v.size() >= n_) return false;
  }
  return true;
}

std::size_t CohenManyPoset::max_growth(const Cond& c) const {
  return static_cast<std::size_t>(l_) * (n_ - 1) - total_bits(c);
}

bool CohenManyPoset::cond_less(const Cond& a, const Cond& b) const {
  std::size_t ta = total_bits(a), tb = total_bits(b);
  if (ta != tb) return ta < tb;
  return many_repr(a) < many_repr(b);
}

std::vector<ManyCondition> CohenManyPoset::carrier(std::size_t bound) const {
  std::vector<Cond> out;
  std::function<void(int, std::size_t, ManyCondition)> rec =
      [&](int beta, std::size_t rem, ManyCondition cur) {
        if (beta == l_) {
          out.push_back(std::move(cur));
          return;
        }
        rec(beta + 1, rem, cur);
        for (std::size_t len = 1; len <= rem && len < n_; ++len)
          for (const auto& v : binseq_of_len(len)) {
            ManyCondition next = cur;
            next[beta] = v;
            rec(beta + 1, rem - len, std::move(next));
          }
      };
  rec(0, bound, {});
  std::sort(out.begin(), out.end(), [this](const Cond& a, const Cond& b) {
    return cond_less(a, b);
  });
  return out;
}

std::vector<ManyCondition> CohenManyPoset::upset(const Cond& c) const {
  std::vector<Cond> out;
  std::vector<std::pair<int, BinSeq>> entries(c.begin(), c.end());
  std::function<void(std::size_t, ManyCondition)> rec =
      [&](std::size_t i, ManyCondition cur) {
        if (i == entries.size()) {
          out.push_back(std::move(cur));
          return;
        }
        const auto& [beta, v] = entries[i];
        for (std::size_t len = 0; len <= v.size(); ++len) {
          ManyCondition next = cur;
          if (len > 0) next[beta] = v.substr(0, len);
          rec(i + 1, std::move(next));
        }
      };
  rec(0, {});
  std::sort(out.begin(), out.end(), [this](const Cond& a, const Cond& b) {
    return cond_less(a, b);
  });
  return out;
}

std::vector<ManyCondition> CohenManyPoset::extensions_exact(
    const Cond& c, std::size_t k) const {
  if (k == 0) return contains(c) ? std::vector<Cond>{c} : std::vector<Cond>{};
  std::vector<Cond> out;
  std::function<void(int, std::size_t, ManyCondition)> rec =
      [&](int beta, std::size_t rem, ManyCondition cur) {
        if (beta == l_) {
          if (rem == 0) out.push_back(std::move(cur));
          return;
        }
        rec(beta + 1, rem, cur);
        auto it = c.find(beta);
        const BinSeq base = it == c.end() ? BinSeq{} : it->second;
        for (std::size_t add = 1; add <= rem; ++add) {
          if (base.size() + add >= n_) break;
          for (const auto& w : binseq_of_len(add)) {
            ManyCondition next = cur;
            next[beta] = base + w;
            rec(beta + 1, rem - add, std::move(next));
          }
        }
      };
  rec(0, k, c);
  std::sort(out.begin(), out.end(), [this](const Cond& a, const Cond& b) {
    return cond_less(a, b);
  });
  return out;
}

// ---- LambdaSubposet ----

std::vector<ManyCondition> LambdaSubposet::carrier(std::size_t bound) const {
  std::vector<Cond> out;
  for (auto& c : inner_.carrier(bound))
    if (is_lambda_split(c)) out.push_back(std::move(c));
  return out;
}

std::vector<ManyCondition> LambdaSubposet::upset(const Cond& c) const {
  std::vector<Cond> out{{}};
  if (c.empty()) return out;
  std::size_t gamma = lambda_gamma(c);
  // a SplitCoded prefix with exactly g markers is unique per coordinate, so
  // the upset is indexed by (marker count, nonempty coordinate subset)
  std::vector<int> coords;
  for (const auto& [beta, v] : c) coords.push_back(beta);
  std::vector<std::map<std::size_t, BinSeq>> prefix_at(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const BinSeq& v = c.at(coords[i]);
    std::size_t seen = 0;
    for (std::size_t pos = 0; pos < v.size(); pos += 2)
      if (v[pos] == '1') prefix_at[i][++seen] = v.substr(0, pos + 1);
  }
  for (std::size_t g = 1; g <= gamma; ++g) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << coords.size());
         ++mask) {
      ManyCondition q;
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (mask & (std::size_t{1} << i)) q[coords[i]] = prefix_at[i][g];
      out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end(), [this](const Cond& a, const Cond& b) {
    return cond_less(a, b);
  });
  return out;
}

std::vector<ManyCondition> LambdaSubposet::extensions_exact(
    const Cond& c, std::size_t k) const {
  std::vector<Cond> out;
  for (auto& q : inner_.extensions_exact(c, k))
    if (is_lambda_split(q)) out.push_back(std::move(q));
  return out;
}

std::vector<ManyCondition> lambda_carrier_by_value_len(int lambda,
                                                       std::size_t len_cap) {
  // split-coded strings grouped by marker count
  std::map<std::size_t, std::vector<BinSeq>> by_gamma;
  for (std::size_t len = 1; len <= len_cap; len += 2)
    for (const auto& u : binseq_of_len(len - 1))
      by_gamma[marker_count(u + "1")].push_back(u + "1");
  std::vector<ManyCondition> out{{}};
  std::vector<int> coords(static_cast<std::size_t>(lambda));
  for (int i = 0; i < lambda; ++i) coords[static_cast<std::size_t>(i)] = i;
  for (std::size_t mask = 1; mask < (std::size_t{1} << coords.size());
       ++mask) {
    std::vector<int> dom;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (mask & (std::size_t{1} << i)) dom.push_back(coords[i]);
    for (const auto& [gamma, pool] : by_gamma) {
      std::vector<std::size_t> idx(dom.size(), 0);
      while (true) {
        ManyCondition c;
        for (std::size_t i = 0; i < dom.size(); ++i) c[dom[i]] = pool[idx[i]];
        out.push_back(std::move(c));
        std::size_t i = dom.size();
        while (i > 0 && ++idx[i - 1] == pool.size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return out;
}

}  // namespace cohenlab
