#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cohenlab/errors.hpp"
#include "cohenlab/order.hpp"

namespace cohenlab {

// top-preserving, order-preserving map with the lifting property
template <class DomP, class CodP>
struct Projection {
  using DomCond = typename DomP::Cond;
  using CodCond = typename CodP::Cond;

  DomP dom;
  CodP cod;
  std::function<CodCond(const DomCond&)> map{};
  // canonical lifting witness; may be absent, then verification searches
  std::function<DomCond(const DomCond&, const CodCond&)> lift{};
  // witness promises map(lift(p, q)) == q, not merely <= q
  bool lift_equality = false;
  std::string name{};
};

struct Violation {
  std::string kind;  // top | order | lift-missing | lift-not-below | lift-image
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t order_pairs_checked = 0;
  std::size_t lift_pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  std::size_t domain_bound = 0;
  // codomain q ranges over extensions of map(p) adding at most this much size
  std::size_t codomain_extra = 0;
  bool use_witness = true;       // otherwise search the domain for a lift
  std::size_t search_extra = 4;  // search depth below p in search mode
  std::size_t budget = std::size_t{1} << 22;
};

template <class DomP, class CodP>
VerificationReport verify_projection(
    const Projection<DomP, CodP>& pi, const VerifyOptions& opt,
    const std::vector<typename DomP::Cond>* domain_override = nullptr) {
  using DC = typename DomP::Cond;
  VerificationReport rep;
  std::size_t spent = 0;
  auto charge = [&](std::size_t n) {
    spent += n;
    if (spent > opt.budget)
      throw BoundExceeded("verification budget exhausted");
  };

  if (!(pi.map(pi.dom.top()) == pi.cod.top()))
    rep.violations.push_back({"top", "map(top) differs from codomain top"});

  std::vector<DC> sample =
      domain_override ? *domain_override : pi.dom.carrier(opt.domain_bound);

  for (const auto& p2 : sample) {
    auto image2 = pi.map(p2);
    for (const auto& p : pi.dom.upset(p2)) {
      charge(1);
      ++rep.order_pairs_checked;
      if (!pi.cod.leq(image2, pi.map(p)))
        rep.violations.push_back(
            {"order", cond_repr(p2) + " <= " + cond_repr(p) +
                          " but images are not ordered"});
    }
  }

  for (const auto& p : sample) {
    auto image = pi.map(p);
    for (std::size_t k = 0; k <= opt.codomain_extra; ++k) {
      for (const auto& q : pi.cod.extensions_exact(image, k)) {
        charge(1);
        ++rep.lift_pairs_checked;
        if (opt.use_witness && pi.lift) {
          DC w = pi.lift(p, q);
          if (!pi.dom.leq(w, p)) {
            rep.violations.push_back(
                {"lift-not-below", "witness for (" + cond_repr(p) + ", " +
                                       cond_repr(q) + ") does not extend p"});
            continue;
          }
          auto wi = pi.map(w);
          bool good = pi.lift_equality ? (wi == q) : pi.cod.leq(wi, q);
          if (!good)
            rep.violations.push_back(
                {"lift-image", "witness image for (" + cond_repr(p) + ", " +
                                   cond_repr(q) + ") misses q"});
        } else {
          bool found = false;
          std::size_t cap = std::min(opt.search_extra, pi.dom.max_growth(p));
          for (std::size_t j = 0; j <= cap && !found; ++j) {
            for (const auto& w : pi.dom.extensions_exact(p, j)) {
              charge(1);
              if (pi.cod.leq(pi.map(w), q)) {
                found = true;
                break;
              }
            }
          }
          if (!found)
            rep.violations.push_back(
                {"lift-missing", "no domain extension of " + cond_repr(p) +
                                     " projects below " + cond_repr(q)});
        }
      }
    }
  }
  return rep;
}

// absolute-bound overload: q ranges over the codomain carrier of size <=
// codomain_bound lying below map(p)
template <class DomP, class CodP>
VerificationReport verify_projection(const Projection<DomP, CodP>& pi,
                                     std::size_t domain_bound,
                                     std::size_t codomain_bound,
                                     bool use_witness = true) {
  VerificationReport total;
  VerifyOptions opt;
  opt.domain_bound = domain_bound;
  opt.use_witness = use_witness;
  for (const auto& p : pi.dom.carrier(domain_bound)) {
    auto image = pi.map(p);
    std::size_t sz = pi.cod.size_of(image);
    if (sz > codomain_bound) continue;
    opt.codomain_extra = codomain_bound - sz;
    std::vector<typename DomP::Cond> one{p};
    auto rep = verify_projection(pi, opt, &one);
    for (auto& v : rep.violations) total.violations.push_back(std::move(v));
    total.order_pairs_checked += rep.order_pairs_checked;
    total.lift_pairs_checked += rep.lift_pairs_checked;
  }
  if (!(pi.map(pi.dom.top()) == pi.cod.top()))
    total.violations.push_back({"top", "map(top) differs from codomain top"});
  return total;
}

// upward closure of the image of G restricted to the domain carrier
template <class DomP, class CodP>
FilterSet<typename CodP::Cond> pushforward(
    const Projection<DomP, CodP>& pi,
    const FilterSet<typename DomP::Cond>& g) {
  using CC = typename CodP::Cond;
  std::vector<CC> images;
  for (const auto& c : g.elems)
    if (pi.dom.contains(c)) images.push_back(pi.map(c));
  // strongest first, so anything above an already-kept image drops out and
  // only the generating images get closed over
  std::sort(images.begin(), images.end(), [&](const CC& a, const CC& b) {
    const std::size_t sa = pi.cod.size_of(a), sb = pi.cod.size_of(b);
    if (sa != sb) return sa > sb;
    return pi.cod.cond_less(a, b);
  });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<CC> gens;
  for (const auto& x : images) {
    bool covered = false;
    for (const auto& m : gens)
      if (pi.cod.leq(m, x)) {
        covered = true;
        break;
      }
    if (!covered) gens.push_back(x);
  }
  auto out = upward_close(pi.cod, gens);
  // one generator's upset is a filter by reflexivity and transitivity alone;
  // anything else gets the full check
  if (gens.size() != 1) {
    auto chk = check_filter(pi.cod, out);
    if (!chk.ok())
      throw MalformedCondition("pushforward image fails filter invariants: " +
                               chk.detail);
  }
  return out;
}

// {p in domain : exists q in E with map(p) <= q}; dense when pi projects.
// total on ambient conditions: anything outside the domain carrier is out
template <class DomP, class CodP>
DenseSet<typename DomP::Cond> project_dense(
    const Projection<DomP, CodP>& pi, const DenseSet<typename CodP::Cond>& e) {
  auto dom = pi.dom;
  auto cod = pi.cod;
  auto map = pi.map;
  auto pred = e.pred;
  return DenseSet<typename DomP::Cond>{
      [dom, cod, map, pred](const typename DomP::Cond& p) {
        if (!dom.contains(p)) return false;
        for (const auto& q : cod.upset(map(p)))
          if (pred(q)) return true;
        return false;
      },
      "preimage[" + e.desc + "]"};
}

}  // namespace cohenlab
