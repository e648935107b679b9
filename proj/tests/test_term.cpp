#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cohenlab/cohen.hpp"
#include "cohenlab/errors.hpp"
#include "cohenlab/finite_poset.hpp"
#include "cohenlab/json_io.hpp"
#include "cohenlab/order.hpp"
#include "cohenlab/projection.hpp"
#include "cohenlab/rng.hpp"
#include "cohenlab/term.hpp"

using namespace cohenlab;

namespace {

bool filter_meets(const FilterSet<int>& f, const Antichain& a) {
  for (int x : a)
    if (f.contains(x)) return true;
  return false;
}

}  // namespace

TEST_CASE("antichain enumeration over the diamond") {
  auto p = FinitePoset::diamond();
  CHECK(is_antichain(p, {}));
  CHECK(!is_antichain(p, {1, 2}));  // compatible through the bottom
  CHECK(!is_antichain(p, {0, 1}));  // comparable
  CHECK(!is_antichain(p, {1, 3}));
  CHECK(!is_antichain(p, {2, 1}));  // unsorted is rejected
  CHECK(!is_antichain(p, {1, 1}));

  auto all = all_antichains(p);
  CHECK(all == std::vector<Antichain>{{}, {0}, {1}, {2}, {3}});
  CHECK(all_antichains(FinitePoset::flat(2)) ==
        std::vector<Antichain>{{}, {0}, {1}, {2}, {1, 2}});
}

TEST_CASE("coverage masks and the induced equivalence") {
  auto d = FinitePoset::diamond();
  CHECK(atom_coverage(d, {}) == 0);
  // the only atom 3 sits below everything
  for (const Antichain& a : {Antichain{0}, Antichain{1}, Antichain{2},
                             Antichain{3}})
    CHECK(atom_coverage(d, a) == (1u << 3));
  CHECK(equiv(d, {1}, {2}));
  CHECK(equiv(d, {0}, {3}));
  CHECK(!equiv(d, {}, {3}));

  auto f = FinitePoset::flat(2);
  CHECK(atom_coverage(f, {0}) == 0b110);
  CHECK(atom_coverage(f, {1}) == 0b010);
  CHECK(atom_coverage(f, {1, 2}) == 0b110);
  CHECK(equiv(f, {0}, {1, 2}));
  CHECK(!equiv(f, {1}, {2}));
}

TEST_CASE("equivalence agrees with the atom-filter oracle on the catalog") {
  for (const auto& p : topped_poset_catalog(3)) {
    const auto atoms = p.atoms();
    const auto all = all_antichains(p);
    std::vector<FilterSet<int>> gens;
    for (int m : atoms) gens.push_back(atom_filter(p, m));
    for (const auto& a : all)
      for (const auto& b : all) {
        bool oracle = true;
        for (const auto& g : gens)
          if (filter_meets(g, a) != filter_meets(g, b)) {
            oracle = false;
            break;
          }
        CHECK(equiv(p, a, b) == oracle);
      }
  }
}

TEST_CASE("term order is a preorder, not a partial order") {
  auto d = FinitePoset::diamond();
  CHECK(term_leq(d, {{1}}, {}));
  CHECK(term_leq(d, {{1}, {}}, {{2}}));
  CHECK(!term_leq(d, {{1}}, {{1}, {}}));  // shorter can't extend longer
  CHECK(!term_leq(d, {{}}, {{1}}));

  TermPoset tp(d, 3);
  CHECK(tp.carrier(2).size() == 31);  // 1 + 5 + 25
  CHECK(tp.carrier(1).size() == 6);
  auto chk = check_poset(tp, 2, false);
  CHECK(chk.ok());
  CHECK(!check_poset(tp, 1, true).antisymmetric);

  CHECK(tp.class_of({1}).size() == 4);
  CHECK(tp.class_of({}) == std::vector<Antichain>{{}});
  CHECK_THROWS_AS(tp.rank_of({0, 1}), MalformedCondition);
  CHECK(tp.contains({{1}, {2}}));
  CHECK(!tp.contains({{0, 1}}));
  CHECK(!tp.contains({{1}, {2}, {3}}));  // n_max caps the length

  CHECK(tp.upset({{}}) == std::vector<TermCondition>{{}, {{}}});
  CHECK(tp.upset({{1}}).size() == 5);  // top + the four class twins
  CHECK(tp.extensions_exact({}, 1).size() == 5);
  CHECK(tp.extensions_exact({{1}}, 2).empty());  // would exceed n_max
}

TEST_CASE("labels split antichains by full coverage") {
  auto d = FinitePoset::diamond();
  auto lab = default_labeler(d);
  CHECK(lab.desc == "full-coverage");
  CHECK(lab.label({}) == 0);
  CHECK(lab.label({1}) == 1);
  CHECK(lab.label({3}) == 1);

  auto f = FinitePoset::flat(2);
  auto labf = default_labeler(f);
  CHECK(labf.label({0}) == 1);
  CHECK(labf.label({1, 2}) == 1);
  CHECK(labf.label({1}) == 0);

  CHECK(term_to_cohen(d, lab, {{1}, {}, {3}}) == "101");
  CHECK(term_to_cohen(d, lab, {}) == "");
}

TEST_CASE("term lifts append canonical antichains per fresh bit") {
  auto d = FinitePoset::diamond();
  auto lab = default_labeler(d);
  CHECK(lift_term(d, lab, {}, "10") ==
        TermCondition{{0}, {}});
  CHECK(lift_term(d, lab, {{1}}, "1") == TermCondition{{1}});
  CHECK(lift_term(d, lab, {{1}}, "101") ==
        TermCondition{{1}, {}, {0}});
  CHECK_THROWS_AS(lift_term(d, lab, {{1}}, "0"), NotBelow);
}

TEST_CASE("bit blocks decode to antichains or collapse to the empty one") {
  auto f = FinitePoset::flat(2);
  CHECK(cohen_to_term(f, "011") == TermCondition{{1, 2}});
  CHECK(cohen_to_term(f, "111") == TermCondition{{}});
  CHECK(cohen_to_term(f, "100") == TermCondition{{0}});
  CHECK(cohen_to_term(f, "011100") == TermCondition{{1, 2}, {0}});
  CHECK(cohen_to_term(f, "") == TermCondition{});
  CHECK_THROWS_AS(cohen_to_term(f, "01"), LengthNotMultiple);
  CHECK_THROWS_AS(cohen_to_term(f, "210"), MalformedCondition);

  auto dmd = FinitePoset::diamond();
  // {1,2} is compatible through the bottom, so the block clears
  CHECK(cohen_to_term(dmd, "0110") == TermCondition{{}});
  CHECK(cohen_to_term(dmd, "1100") == TermCondition{{}});
}

TEST_CASE("evaluation against atom filters") {
  auto d = FinitePoset::diamond();
  auto g = atom_filter(d, 3);
  CHECK(g.elems == std::vector<int>{0, 1, 2, 3});
  CHECK(eval_name(d, {{1}, {3}, {}}, g) == "110");
  CHECK(eval_name(d, {}, g) == "");

  auto f = FinitePoset::flat(2);
  auto g1 = atom_filter(f, 1);
  CHECK(g1.elems == std::vector<int>{0, 1});
  CHECK(eval_name(f, {{1, 2}, {2}}, g1) == "10");
}

TEST_CASE("transfer pushes a term filter to a sequence filter") {
  auto d = FinitePoset::diamond();
  TermPoset tp(d, 4);
  auto h = upward_close(tp, {TermCondition{{1}, {}}});
  auto g = atom_filter(d, 3);
  auto out = term_transfer(d, h, g, 16);
  CHECK(out.elems == std::vector<BinSeq>{"", "1", "10"});
  CHECK(check_filter(CohenOnePoset(16), out).ok());
}

TEST_CASE("term projections verify on small bases") {
  for (const auto& base :
       {FinitePoset::diamond(), FinitePoset::chain(3), FinitePoset::flat(2)}) {
    auto pi = make_term_projection(base, default_labeler(base), 4, 16);
    CHECK(pi.lift_equality);
    VerifyOptions opt;
    opt.domain_bound = 2;
    opt.codomain_extra = 2;
    auto rep = verify_projection(pi, opt);
    CHECK(rep.ok());
    CHECK(rep.lift_pairs_checked > 0);
  }
}

TEST_CASE("block projections onto term posets verify without equality") {
  auto f = FinitePoset::flat(2);
  auto pi = make_cohen_term_projection(f, 6, 16);
  CHECK(!pi.lift_equality);
  CHECK(pi.dom.contains("011"));
  CHECK(pi.map("011100") == TermCondition{{1, 2}, {0}});
  VerifyOptions opt;
  opt.domain_bound = 6;
  opt.codomain_extra = 1;
  auto rep = verify_projection(pi, opt);
  CHECK(rep.ok());

  auto dmd = FinitePoset::diamond();
  auto pid = make_cohen_term_projection(dmd, 4, 20);
  VerifyOptions optd;
  optd.domain_bound = 4;
  optd.codomain_extra = 1;
  CHECK(verify_projection(pid, optd).ok());
}

TEST_CASE("translated dense sets gate every atom evaluation") {
  auto f = FinitePoset::flat(2);
  DenseSet<BinSeq> ends1{
      [](const BinSeq& s) { return !s.empty() && s.back() == '1'; },
      "ends-1"};
  auto t = translate_dense(f, ends1);
  CHECK(t.pred({{1, 2}}));
  CHECK(t.pred({{0}}));
  CHECK(!t.pred({{1}}));  // the atom-2 evaluation ends with 0
  CHECK(!t.pred({}));
  CHECK(is_dense(TermPoset(f, 8), t, 1));
}

TEST_CASE("generics on the term side transfer to every original dense set") {
  Rng rng(515);
  auto d = FinitePoset::diamond();
  TermPoset tp(d, 24);
  for (int round = 0; round < 3; ++round) {
    std::vector<DenseSet<BinSeq>> originals;
    std::vector<DenseSet<TermCondition>> translated;
    for (int i = 0; i < 4; ++i) {
      originals.push_back(seq_dense_from_json(random_seq_dense_json(rng)));
      translated.push_back(translate_dense(d, originals.back()));
    }
    auto gen = build_generic(tp, translated, {});
    CHECK(is_generic(gen.filter, translated));
    for (int atom : d.atoms()) {
      auto g = atom_filter(d, atom);
      auto moved = term_transfer(d, gen.filter, g, 64);
      CHECK(check_filter(CohenOnePoset(64), moved).ok());
      for (const auto& e : originals) {
        bool met = false;
        for (const auto& c : moved.elems) met |= e.pred(c);
        CHECK(met);
      }
    }
  }
}

TEST_CASE("term and finite poset json round-trips") {
  TermCondition q{{1, 2}, {}};
  CHECK(term_to_json(q).dump() == "[[1,2],[]]");
  CHECK(term_from_json(term_to_json(q)) == q);
  CHECK_THROWS_AS(term_from_json(Json::parse("[[1,\"x\"]]")),
                  MalformedCondition);
  CHECK_THROWS_AS(term_from_json(Json::parse("{}")), MalformedCondition);

  auto d = FinitePoset::diamond();
  auto back = finite_poset_from_json(finite_poset_to_json(d));
  CHECK(back.size() == d.size());
  CHECK(back.top() == d.top());
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b) CHECK(back.leq(a, b) == d.leq(a, b));

  auto j = Json{{"carrier", Json::array({"t", "x", "y"})},
                {"leq_pairs", Json::array({Json::array({1, 0}),
                                           Json::array({2, 0})})},
                {"top", 0}};
  auto fp = finite_poset_from_json(j);
  CHECK(fp.size() == 3);
  CHECK(fp.labels == std::vector<std::string>{"t", "x", "y"});
  CHECK_THROWS_AS(
      finite_poset_from_json(Json{{"size", 2}, {"top", 0}, {"leq_pairs", Json::array({Json::array({0, 1}), Json::array({1, 0})})}}),
      MalformedCondition);
}
