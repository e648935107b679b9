#include "cohenlab/term.hpp"

#include <algorithm>
#include <cstdint>

#include "cohenlab/errors.hpp"

namespace cohenlab {

namespace {

std::string antichain_repr(const Antichain& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  s += '}';
  return s;
}

std::uint32_t antichain_mask(const Antichain& a) {
  std::uint32_t m = 0;
  for (int x : a) m |= std::uint32_t{1} << x;
  return m;
}

// cartesian product of the option lists, last position fastest, so the
// output is ascending in entrywise rank order when each list is ascending
void product_over(const std::vector<const std::vector<Antichain>*>& lists,
                  std::vector<TermCondition>& out) {
  const std::size_t len = lists.size();
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    TermCondition q;
    q.reserve(len);
    for (std::size_t i = 0; i < len; ++i) q.push_back((*lists[i])[idx[i]]);
    out.push_back(std::move(q));
    bool done = (len == 0);
    std::size_t pos = len;
    while (!done) {
      --pos;
      if (++idx[pos] < lists[pos]->size()) break;
      idx[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
}

}  // namespace

std::string term_repr(const TermCondition& q) {
  std::string s = "[";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ',';
    s += antichain_repr(q[i]);
  }
  s += ']';
  return s;
}

bool is_antichain(const FinitePoset& p, const Antichain& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= p.size()) return false;
    if (i && a[i - 1] >= a[i]) return false;  // sorted, no duplicates
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (p.compatible(a[i], a[j])) return false;
  return true;
}

std::vector<Antichain> all_antichains(const FinitePoset& p) {
  std::vector<Antichain> out;
  const std::uint32_t lim = std::uint32_t{1} << p.size();
  for (std::uint32_t mask = 0; mask < lim; ++mask) {
    Antichain a;
    for (int i = 0; i < p.size(); ++i)
      if (mask >> i & 1) a.push_back(i);
    if (is_antichain(p, a)) out.push_back(std::move(a));
  }
  return out;
}

std::uint32_t atom_coverage(const FinitePoset& p, const Antichain& a) {
  std::uint32_t cov = 0;
  for (int m : p.atoms()) {
    for (int x : a) {
      if (p.leq(m, x)) {
        cov |= std::uint32_t{1} << m;
        break;
      }
    }
  }
  return cov;
}

bool equiv(const FinitePoset& p, const Antichain& a, const Antichain& b) {
  return atom_coverage(p, a) == atom_coverage(p, b);
}

bool term_leq(const FinitePoset& p, const TermCondition& a,
              const TermCondition& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!equiv(p, a[i], b[i])) return false;
  return true;
}

AntichainLabeler default_labeler(const FinitePoset& p) {
  std::uint32_t all = 0;
  for (int m : p.atoms()) all |= std::uint32_t{1} << m;
  return AntichainLabeler{
      [p, all](const Antichain& a) {
        return atom_coverage(p, a) == all ? 1 : 0;
      },
      "full-coverage"};
}

BinSeq term_to_cohen(const FinitePoset& p, const AntichainLabeler& d,
                     const TermCondition& q) {
  (void)p;
  BinSeq out;
  out.reserve(q.size());
  for (const Antichain& a : q) out.push_back(d.label(a) ? '1' : '0');
  return out;
}

TermCondition lift_term(const FinitePoset& p, const AntichainLabeler& d,
                        const TermCondition& cond, const BinSeq& q) {
  const BinSeq image = term_to_cohen(p, d, cond);
  if (!extends(q, image))
    throw NotBelow("lift_term: target does not extend the image");
  TermCondition out = cond;
  for (std::size_t i = image.size(); i < q.size(); ++i) {
    if (q[i] == '1')
      out.push_back(Antichain{p.top()});
    else
      out.push_back(Antichain{});
  }
  return out;
}

TermCondition cohen_to_term(const FinitePoset& p, const BinSeq& bits) {
  require_binseq(bits);
  const std::size_t delta = p.size();
  if (bits.size() % delta != 0)
    throw LengthNotMultiple("cohen_to_term: length " +
                            std::to_string(bits.size()) +
                            " is not a multiple of " + std::to_string(delta));
  TermCondition out;
  out.reserve(bits.size() / delta);
  for (std::size_t b = 0; b < bits.size(); b += delta) {
    Antichain a;
    for (std::size_t i = 0; i < delta; ++i)
      if (bits[b + i] == '1') a.push_back(static_cast<int>(i));
    if (!is_antichain(p, a)) a.clear();
    out.push_back(std::move(a));
  }
  return out;
}

BinSeq eval_name(const FinitePoset& p, const TermCondition& q,
                 const FilterSet<int>& g) {
  (void)p;
  BinSeq out;
  out.reserve(q.size());
  for (const Antichain& a : q) {
    bool meets = false;
    for (int x : a)
      if (g.contains(x)) {
        meets = true;
        break;
      }
    out.push_back(meets ? '1' : '0');
  }
  return out;
}

FilterSet<BinSeq> term_transfer(const FinitePoset& p,
                                const FilterSet<TermCondition>& h,
                                const FilterSet<int>& g, std::size_t max_len) {
  std::vector<BinSeq> evals;
  evals.reserve(h.size());
  for (const TermCondition& q : h.elems) evals.push_back(eval_name(p, q, g));
  const CohenOnePoset cod(max_len);
  return upward_close(cod, evals);
}

FilterSet<int> atom_filter(const FinitePoset& p, int atom) {
  return FilterSet<int>::from(p.upset(atom));
}

TermPoset::TermPoset(FinitePoset base, std::size_t n_max)
    : base_(std::move(base)),
      n_max_(n_max ? n_max : 1),
      antichains_(all_antichains(base_)) {
  coverage_.reserve(antichains_.size());
  for (const Antichain& a : antichains_)
    coverage_.push_back(atom_coverage(base_, a));
  class_lists_.resize(antichains_.size());
  for (std::size_t r = 0; r < antichains_.size(); ++r)
    for (std::size_t s = 0; s < antichains_.size(); ++s)
      if (coverage_[s] == coverage_[r])
        class_lists_[r].push_back(antichains_[s]);
}

std::size_t TermPoset::rank_of(const Antichain& a) const {
  const std::uint32_t mask = antichain_mask(a);
  for (std::size_t r = 0; r < antichains_.size(); ++r)
    if (antichain_mask(antichains_[r]) == mask && antichains_[r] == a)
      return r;
  throw MalformedCondition("rank_of: not an antichain of this poset: " +
                           antichain_repr(a));
}

const std::vector<Antichain>& TermPoset::class_of(const Antichain& a) const {
  return class_lists_[rank_of(a)];
}

bool TermPoset::contains(const Cond& c) const {
  if (c.size() >= n_max_) return false;
  for (const Antichain& a : c)
    if (!is_antichain(base_, a)) return false;
  return true;
}

bool TermPoset::cond_less(const Cond& a, const Cond& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t ra = rank_of(a[i]), rb = rank_of(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::vector<TermPoset::Cond> TermPoset::carrier(std::size_t bound) const {
  std::vector<Cond> out;
  const std::size_t top_len = std::min(bound, n_max_ - 1);
  for (std::size_t len = 0; len <= top_len; ++len) {
    std::vector<const std::vector<Antichain>*> lists(len, &antichains_);
    product_over(lists, out);
  }
  return out;
}

std::vector<TermPoset::Cond> TermPoset::upset(const Cond& c) const {
  std::vector<Cond> out;
  for (std::size_t len = 0; len <= c.size(); ++len) {
    std::vector<const std::vector<Antichain>*> lists;
    lists.reserve(len);
    for (std::size_t i = 0; i < len; ++i) lists.push_back(&class_of(c[i]));
    product_over(lists, out);
  }
  return out;
}

std::vector<TermPoset::Cond> TermPoset::extensions_exact(
    const Cond& c, std::size_t k) const {
  std::vector<Cond> out;
  if (c.size() + k >= n_max_) return out;
  std::vector<const std::vector<Antichain>*> lists;
  lists.reserve(c.size() + k);
  for (const Antichain& a : c) lists.push_back(&class_of(a));
  for (std::size_t i = 0; i < k; ++i) lists.push_back(&antichains_);
  product_over(lists, out);
  return out;
}

Projection<TermPoset, CohenOnePoset> make_term_projection(
    const FinitePoset& p, const AntichainLabeler& d, std::size_t n_max,
    std::size_t max_len) {
  Projection<TermPoset, CohenOnePoset> pi{TermPoset(p, n_max),
                                          CohenOnePoset(max_len)};
  FinitePoset base = p;
  pi.map = [base, d](const TermCondition& q) {
    return term_to_cohen(base, d, q);
  };
  pi.lift = [base, d](const TermCondition& cond, const BinSeq& q) {
    return lift_term(base, d, cond, q);
  };
  pi.lift_equality = true;
  pi.name = "term[" + d.desc + "]";
  return pi;
}

Projection<MultipleSubposet, TermPoset> make_cohen_term_projection(
    const FinitePoset& p, std::size_t n_max, std::size_t max_len) {
  const std::size_t delta = p.size();
  Projection<MultipleSubposet, TermPoset> pi{MultipleSubposet(delta, max_len),
                                             TermPoset(p, n_max)};
  FinitePoset base = p;
  pi.map = [base](const BinSeq& bits) { return cohen_to_term(base, bits); };
  pi.lift = [base, delta](const BinSeq& bits, const TermCondition& q) {
    const TermCondition image = cohen_to_term(base, bits);
    if (!term_leq(base, q, image))
      throw NotBelow("cohen-term lift: target is not below the image");
    BinSeq out = bits;
    for (std::size_t i = image.size(); i < q.size(); ++i) {
      BinSeq block(delta, '0');
      for (int x : q[i]) block[static_cast<std::size_t>(x)] = '1';
      out += block;
    }
    return out;
  };
  pi.lift_equality = false;  // the lift reaches q only up to equivalence
  pi.name = "cohen-term[delta=" + std::to_string(delta) + "]";
  return pi;
}

DenseSet<TermCondition> translate_dense(const FinitePoset& p,
                                        const DenseSet<BinSeq>& d) {
  FinitePoset base = p;
  auto inner = d.pred;
  return DenseSet<TermCondition>{
      [base, inner](const TermCondition& q) {
        for (int m : base.atoms()) {
          BinSeq bits;
          bits.reserve(q.size());
          for (const Antichain& a : q) {
            const std::uint32_t cov = atom_coverage(base, a);
            bits.push_back((cov >> m & 1) ? '1' : '0');
          }
          if (!inner(bits)) return false;
        }
        return true;
      },
      "translated[" + d.desc + "]"};
}

}  // namespace cohenlab
