#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohenlab/approximation.hpp"
#include "cohenlab/cohen.hpp"
#include "cohenlab/dictionary.hpp"
#include "cohenlab/errors.hpp"
#include "cohenlab/finite_poset.hpp"
#include "cohenlab/iteration.hpp"
#include "cohenlab/json_io.hpp"
#include "cohenlab/order.hpp"
#include "cohenlab/projection.hpp"
#include "cohenlab/rng.hpp"
#include "cohenlab/term.hpp"

using namespace cohenlab;

namespace {

// exit contract: 0 clean, 1 mathematical counterexample, 2 bad input
constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;

struct Common {
  std::string in;
  std::string file;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t bound = 64;
  std::size_t budget = std::size_t{1} << 22;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--in", c.in, "inline input (string or JSON)");
  sub->add_option("--file", c.file, "input file with JSON");
  sub->add_option("--out", c.out, "write result here instead of stdout");
  sub->add_option("--seed", c.seed, "seed for randomized choices");
  sub->add_option("--bound", c.bound, "size bound for conditions");
}

std::string raw_input(const Common& c) {
  if (!c.file.empty()) {
    std::ifstream f(c.file);
    if (!f) throw MalformedCondition("cannot open input file: " + c.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return c.in;
}

Json json_input(const Common& c) {
  const std::string raw = raw_input(c);
  if (raw.empty()) throw MalformedCondition("no input given (--in or --file)");
  return Json::parse(raw);
}

int emit(const Common& c, const Json& j, int code) {
  const std::string text = j.dump() + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw MalformedCondition("cannot open output file: " + c.out);
    f << text;
  }
  return code;
}

SearchLimits limits(const Common& c) {
  SearchLimits lim;
  lim.budget = c.budget;
  return lim;
}

// ---- codec ----

int run_codec(const Common& c, const std::string& action, bool loose) {
  Json out = Json::object();
  if (action == "decode") {
    const BinSeq p = raw_input(c);
    const auto blocks = loose ? decode_blocks_loose(p) : decode_blocks(p);
    out["blocks"] = blocks;
    return emit(c, out, kOk);
  }
  if (action == "encode") {
    const Json j = json_input(c);
    std::vector<BinSeq> blocks;
    for (const auto& b : j) blocks.push_back(binseq_from_json(b));
    out["coded"] = encode_blocks(blocks, c.bound);
    return emit(c, out, kOk);
  }
  if (action == "densify") {
    out["coded"] = densify(raw_input(c), c.bound);
    return emit(c, out, kOk);
  }
  if (action == "decode-lambda") {
    const auto slices = decode_lambda(many_from_json(json_input(c)));
    Json arr = Json::array();
    for (const auto& s : slices) arr.push_back(many_to_json(s));
    out["slices"] = std::move(arr);
    return emit(c, out, kOk);
  }
  if (action == "encode-lambda") {
    const Json j = json_input(c);
    std::vector<ManyCondition> slices;
    for (const auto& s : j.at("slices")) slices.push_back(many_from_json(s));
    const ManyCondition base =
        j.contains("base") ? many_from_json(j.at("base")) : ManyCondition{};
    out["coded"] = many_to_json(encode_lambda(slices, base, c.bound));
    return emit(c, out, kOk);
  }
  throw MalformedCondition("unknown codec action: " + action);
}

// ---- project / lift ----

int run_project(const Common& c, const std::string& dict, int lambda) {
  Json out = Json::object();
  if (lambda > 0) {
    const auto d = dictionary_many_by_name(dict, c.seed, lambda, c.bound);
    out["image"] = many_to_json(project_many(d, many_from_json(json_input(c))));
  } else {
    const auto d = dictionary_by_name(dict, c.seed, c.bound);
    out["image"] = project_one(d, raw_input(c));
  }
  return emit(c, out, kOk);
}

int run_lift(const Common& c, const std::string& dict, int lambda,
             const std::string& to) {
  Json out = Json::object();
  if (lambda > 0) {
    const auto d = dictionary_many_by_name(dict, c.seed, lambda, c.bound);
    const ManyCondition p = many_from_json(json_input(c));
    const ManyCondition q = many_from_json(Json::parse(to));
    out["witness"] = many_to_json(lift_many(d, p, q));
  } else {
    const auto d = dictionary_by_name(dict, c.seed, c.bound);
    out["witness"] = lift_one(d, raw_input(c), to);
  }
  return emit(c, out, kOk);
}

// ---- verify ----

FinitePoset poset_arg(const std::string& text) {
  if (text.empty()) return FinitePoset::diamond();
  if (text == "diamond") return FinitePoset::diamond();
  if (text.rfind("chain", 0) == 0 && text.size() > 5)
    return FinitePoset::chain(std::stoi(text.substr(5)));
  if (text.rfind("flat", 0) == 0 && text.size() > 4)
    return FinitePoset::flat(std::stoi(text.substr(4)));
  return finite_poset_from_json(Json::parse(text));
}

int run_verify(const Common& c, const std::string& selector,
               const std::string& poset_text, int lambda,
               std::size_t cod_extra) {
  VerificationReport rep;
  std::string name;
  const auto split_suffix = std::string("-split");
  const auto lambda_suffix = std::string("-lambda");
  auto ends = [&](const std::string& s, const std::string& suf) {
    return s.size() > suf.size() &&
           s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
  };
  VerifyOptions opt;
  opt.domain_bound = c.bound;
  opt.codomain_extra = cod_extra;
  opt.budget = c.budget;
  if (ends(selector, split_suffix)) {
    const std::string dict =
        selector.substr(0, selector.size() - split_suffix.size());
    const std::size_t dom_len = 2 * c.bound + 3;
    const auto pi =
        make_split_projection(dictionary_by_name(dict, c.seed, dom_len), dom_len);
    rep = verify_projection(pi, opt);
    name = pi.name;
  } else if (ends(selector, lambda_suffix)) {
    const std::string dict =
        selector.substr(0, selector.size() - lambda_suffix.size());
    const int l = lambda > 0 ? lambda : 2;
    const std::size_t dom_len = 4 * c.bound + 8;
    const auto pi = make_lambda_projection(
        dictionary_many_by_name(dict, c.seed, l, dom_len), l, dom_len);
    rep = verify_projection(pi, opt);
    name = pi.name;
  } else if (selector == "term") {
    const FinitePoset p = poset_arg(poset_text);
    const auto pi = make_term_projection(p, default_labeler(p), c.bound + 1,
                                         c.bound + 8);
    rep = verify_projection(pi, opt);
    name = pi.name;
  } else if (selector == "cohen-term") {
    const FinitePoset p = poset_arg(poset_text);
    const auto pi = make_cohen_term_projection(
        p, c.bound + 2, static_cast<std::size_t>(p.size()) * (c.bound + 2) + 1);
    rep = verify_projection(pi, opt);
    name = pi.name;
  } else {
    throw MalformedCondition("unknown projection selector: " + selector);
  }
  Json out = report_to_json(rep);
  out["projection"] = name;
  return emit(c, out, rep.ok() ? kOk : kCounterexample);
}

// ---- generic / push ----

template <class P>
int run_generic_on(const Common& c, const P& poset,
                   std::vector<DenseSet<typename P::Cond>> dense,
                   typename P::Cond start,
                   Json (*cond_json)(const typename P::Cond&)) {
  try {
    const auto res = build_generic(poset, dense, start, limits(c));
    Json out = Json::object();
    Json chain = Json::array();
    for (const auto& x : res.chain) chain.push_back(cond_json(x));
    Json filt = Json::array();
    for (const auto& x : res.filter.elems) filt.push_back(cond_json(x));
    out["chain"] = std::move(chain);
    out["filter"] = std::move(filt);
    return emit(c, out, kOk);
  } catch (const NotDense& e) {
    Json out = Json::object();
    out["error"] = "not-dense";
    out["index"] = e.index;
    out["detail"] = e.what();
    return emit(c, out, kCounterexample);
  }
}

Json seq_json(const BinSeq& s) { return Json(s); }
Json many_json(const ManyCondition& m) { return many_to_json(m); }

int run_generic(const Common& c) {
  const Json j = json_input(c);
  const Json pj = j.at("poset");
  const std::string kind = pj.value("kind", std::string("finite"));
  if (kind == "binseq" || kind == "split" || kind == "multiple") {
    std::vector<DenseSet<BinSeq>> dense;
    for (const auto& d : j.value("dense", Json::array()))
      dense.push_back(seq_dense_from_json(d));
    const BinSeq start = j.value("start", std::string());
    const std::size_t n = pj.value("max_len", c.bound);
    if (kind == "binseq")
      return run_generic_on(c, CohenOnePoset(n), dense, start, &seq_json);
    if (kind == "split")
      return run_generic_on(c, SplitSubposet(n), dense, start, &seq_json);
    return run_generic_on(
        c, MultipleSubposet(pj.value("delta", std::size_t{2}), n), dense,
        start, &seq_json);
  }
  if (kind == "many" || kind == "lambda") {
    std::vector<DenseSet<ManyCondition>> dense;
    for (const auto& d : j.value("dense", Json::array()))
      dense.push_back(many_dense_from_json(d));
    const ManyCondition start = j.contains("start")
                                    ? many_from_json(j.at("start"))
                                    : ManyCondition{};
    const int l = pj.value("lambda", 2);
    const std::size_t n = pj.value("max_len", c.bound);
    if (kind == "many")
      return run_generic_on(c, CohenManyPoset(l, n), dense, start, &many_json);
    return run_generic_on(c, LambdaSubposet(l, n), dense, start, &many_json);
  }
  throw MalformedCondition("unknown poset kind: " + kind);
}

int run_push(const Common& c, int lambda, const std::string& dict) {
  const Json j = json_input(c);
  Json out = Json::object();
  if (lambda > 0) {
    const auto d = dictionary_many_by_name(dict, c.seed, lambda, c.bound);
    const auto pi = make_lambda_projection(d, lambda, c.bound);
    FilterSet<ManyCondition> g;
    if (j.contains("generator")) {
      const CohenManyPoset ground(lambda, c.bound);
      g = upward_close(ground, {many_from_json(j.at("generator"))});
    } else {
      std::vector<ManyCondition> elems;
      for (const auto& e : j.at("filter")) elems.push_back(many_from_json(e));
      g = FilterSet<ManyCondition>::from(std::move(elems));
    }
    const auto pushed = pushforward(pi, g);
    out["filter"] = filter_to_json(pushed);
  } else {
    const auto d = dictionary_by_name(dict, c.seed, c.bound);
    const auto pi = make_split_projection(d, c.bound);
    FilterSet<BinSeq> g;
    if (j.contains("generator")) {
      const CohenOnePoset ground(c.bound);
      g = upward_close(ground, {binseq_from_json(j.at("generator"))});
    } else {
      std::vector<BinSeq> elems;
      for (const auto& e : j.at("filter")) elems.push_back(binseq_from_json(e));
      g = FilterSet<BinSeq>::from(std::move(elems));
    }
    const auto pushed = pushforward(pi, g);
    out["filter"] = filter_to_json(pushed);
  }
  return emit(c, out, kOk);
}

// ---- term ----

int run_term(const Common& c, const std::string& action,
             const std::string& poset_text, int atom) {
  const FinitePoset p = poset_arg(poset_text);
  Json out = Json::object();
  if (action == "to-cohen") {
    const TermCondition q = term_from_json(json_input(c));
    out["bits"] = term_to_cohen(p, default_labeler(p), q);
    return emit(c, out, kOk);
  }
  if (action == "from-cohen") {
    out["term"] = term_to_json(cohen_to_term(p, raw_input(c)));
    return emit(c, out, kOk);
  }
  if (action == "eval") {
    const TermCondition q = term_from_json(json_input(c));
    out["bits"] = eval_name(p, q, atom_filter(p, atom));
    return emit(c, out, kOk);
  }
  if (action == "transfer") {
    const Json j = json_input(c);
    std::vector<TermCondition> elems;
    for (const auto& e : j.at("h")) elems.push_back(term_from_json(e));
    const auto h = FilterSet<TermCondition>::from(std::move(elems));
    const auto g = atom_filter(p, j.value("atom", atom));
    const auto f = term_transfer(p, h, g, c.bound);
    out["filter"] = filter_to_json(f);
    return emit(c, out, kOk);
  }
  if (action == "antichains") {
    Json arr = Json::array();
    for (const auto& a : all_antichains(p)) arr.push_back(a);
    out["antichains"] = std::move(arr);
    return emit(c, out, kOk);
  }
  throw MalformedCondition("unknown term action: " + action);
}

// ---- assemble ----

std::vector<StageSpec> stages_from_json(const Json& j, std::uint64_t seed) {
  std::vector<StageSpec> stages;
  std::size_t id = 0;
  for (const auto& sj : j.at("stages")) {
    StageSpec st;
    st.stage_id = id++;
    st.lambda = sj.value("lambda", 2);
    st.max_len = sj.value("max_len", std::size_t{64});
    const std::string rule = sj.value("rule", std::string("seeded"));
    const std::size_t window = sj.value("window", std::size_t{6});
    st.dictionary_rule = rule_from_name(rule, seed + st.stage_id, st.lambda,
                                        st.max_len, window);
    for (const auto& d : sj.value("dense", Json::array()))
      st.dense_family.push_back(many_dense_from_json(d));
    stages.push_back(std::move(st));
  }
  return stages;
}

int run_assemble(const Common& c) {
  const Json j = json_input(c);
  const auto stages = stages_from_json(j, c.seed);
  try {
    const auto built = build_product_generic(stages, limits(c));
    const auto assembled = assemble_iteration(stages, built.product);
    Json out = Json::object();
    Json arr = Json::array();
    for (std::size_t i = 0; i < assembled.trace.size(); ++i) {
      const auto& tr = assembled.trace[i];
      Json row = Json::object();
      row["stage"] = tr.stage_id;
      row["dictionary_digest"] = tr.dictionary_digest;
      row["filter_size"] = tr.filter_size;
      row["dense_met"] = tr.dense_met;
      row["bottom"] = many_to_json(built.bottoms[i]);
      arr.push_back(std::move(row));
    }
    out["stages"] = std::move(arr);
    return emit(c, out, kOk);
  } catch (const StageFailure& e) {
    Json out = Json::object();
    out["error"] = "stage-failure";
    out["stage"] = e.stage;
    out["dense_index"] = e.dense_index;
    out["detail"] = e.what();
    return emit(c, out, kCounterexample);
  }
}

// ---- approx ----

int run_approx(const Common& c) {
  const auto m = model_pair_from_json(json_input(c));
  const auto v = check_approximation(m);
  return emit(c, verdict_to_json(v), v.holds ? kOk : kCounterexample);
}

// ---- demo ----

Json demo_roundtrip(std::uint64_t seed) {
  Rng rng(seed);
  Json out = Json::object();
  std::vector<BinSeq> blocks;
  const std::size_t n = 1 + rng.below(3);
  for (std::size_t i = 0; i < n; ++i) {
    BinSeq b;
    const std::size_t len = (i == 0 ? 0 : 1) + rng.below(3);
    for (std::size_t k = 0; k < len; ++k) b.push_back(rng.coin() ? '1' : '0');
    if (i > 0 && b.empty()) b = "0";
    blocks.push_back(std::move(b));
  }
  const BinSeq coded = encode_blocks(blocks, 64);
  out["blocks"] = blocks;
  out["coded"] = coded;
  out["decoded"] = decode_blocks(coded);
  out["roundtrip"] = decode_blocks(coded) == blocks;
  return out;
}

Json demo_projection(std::uint64_t seed) {
  Json out = Json::object();
  const auto d = Dictionary::seeded(seed, 64);
  const auto pi = make_split_projection(d, 64);
  const BinSeq p = "00111";
  const BinSeq image = pi.map(p);
  const BinSeq q = image + "10";
  const BinSeq w = pi.lift(p, q);
  out["dictionary"] = d.digest();
  out["p"] = p;
  out["image"] = image;
  out["q"] = q;
  out["witness"] = w;
  out["witness_image"] = pi.map(w);
  out["lift_exact"] = pi.map(w) == q;
  VerifyOptions opt;
  opt.domain_bound = 7;
  opt.codomain_extra = 2;
  out["report"] = report_to_json(verify_projection(pi, opt));
  return out;
}

Json demo_pushforward(std::uint64_t seed) {
  Rng rng(seed);
  Json out = Json::object();
  const std::size_t cod_len = 32;
  const std::size_t dom_len = 2 * cod_len + 1;
  const auto d = Dictionary::seeded(rng.next(), dom_len);
  const auto pi = make_split_projection(d, dom_len);
  std::vector<DenseSet<BinSeq>> cod_dense;
  Json descs = Json::array();
  for (int i = 0; i < 5; ++i) {
    const Json dj = random_seq_dense_json(rng);
    descs.push_back(dj);
    cod_dense.push_back(seq_dense_from_json(dj));
  }
  std::vector<DenseSet<BinSeq>> dom_dense;
  for (const auto& e : cod_dense) dom_dense.push_back(project_dense(pi, e));
  const auto g = build_generic(pi.dom, dom_dense, BinSeq{});
  const auto pushed = pushforward(pi, g.filter);
  bool all = true;
  for (const auto& e : cod_dense) {
    bool met = false;
    for (const auto& x : pushed.elems)
      if (e.pred(x)) {
        met = true;
        break;
      }
    all = all && met;
  }
  out["dense"] = std::move(descs);
  out["chain_bottom"] = g.chain.back();
  out["pushed_size"] = pushed.size();
  out["meets_all"] = all;
  return out;
}

Json demo_lambda(std::uint64_t seed) {
  Json out = Json::object();
  const auto d = DictionaryMany::seeded(seed, 2, 64);
  const auto pi = make_lambda_projection(d, 2, 64);
  const ManyCondition p = {{0, "01001"}};
  const ManyCondition q0 = pi.map(p);
  ManyCondition q = q0;
  q[0] += "1";  // extend whatever the image holds at coordinate 0
  const ManyCondition w = pi.lift(p, q);
  out["dictionary"] = d.digest();
  out["p"] = many_to_json(p);
  out["image"] = many_to_json(q0);
  out["q"] = many_to_json(q);
  out["witness"] = many_to_json(w);
  out["lift_exact"] = pi.map(w) == q;
  return out;
}

Json demo_term(std::uint64_t seed) {
  (void)seed;
  Json out = Json::object();
  const FinitePoset p = FinitePoset::diamond();
  const auto d = default_labeler(p);
  const auto pi = make_term_projection(p, d, 4, 8);
  const TermCondition cond = {};
  const TermCondition lifted = lift_term(p, d, cond, "10");
  out["poset"] = finite_poset_to_json(p);
  out["lifted"] = term_to_json(lifted);
  out["bits"] = term_to_cohen(p, d, lifted);
  VerifyOptions opt;
  opt.domain_bound = 2;
  opt.codomain_extra = 2;
  out["report"] = report_to_json(verify_projection(pi, opt));
  return out;
}

Json demo_pipeline(std::uint64_t seed) {
  Rng rng(seed);
  Json stages = Json::array();
  const int lambdas[3] = {2, 3, 2};
  for (int i = 0; i < 3; ++i) {
    Json st = Json::object();
    st["lambda"] = lambdas[i];
    st["max_len"] = 64;
    st["rule"] = "seeded";
    Json dense = Json::array();
    for (int k = 0; k < 4; ++k)
      dense.push_back(random_many_dense_json(rng, lambdas[i]));
    st["dense"] = std::move(dense);
    stages.push_back(std::move(st));
  }
  Json input = Json::object();
  input["stages"] = std::move(stages);
  const auto specs = stages_from_json(input, seed);
  const auto built = build_product_generic(specs);
  const auto assembled = assemble_iteration(specs, built.product);
  Json out = Json::object();
  out["input"] = std::move(input);
  Json arr = Json::array();
  for (const auto& tr : assembled.trace) {
    Json row = Json::object();
    row["stage"] = tr.stage_id;
    row["dictionary_digest"] = tr.dictionary_digest;
    row["filter_size"] = tr.filter_size;
    row["dense_met"] = tr.dense_met;
    arr.push_back(std::move(row));
  }
  out["stages"] = std::move(arr);
  return out;
}

Json demo_approx(std::uint64_t seed) {
  Rng rng(seed);
  Json out = Json::object();
  const auto m = random_model_pair(rng);
  out["pair"] = model_pair_to_json(m);
  out["result"] = verdict_to_json(check_approximation(m));
  return out;
}

int run_demo(const Common& c, const std::string& scenario) {
  Json out = Json::object();
  if (scenario == "roundtrip") out = demo_roundtrip(c.seed);
  else if (scenario == "projection") out = demo_projection(c.seed);
  else if (scenario == "pushforward") out = demo_pushforward(c.seed);
  else if (scenario == "lambda") out = demo_lambda(c.seed);
  else if (scenario == "term") out = demo_term(c.seed);
  else if (scenario == "pipeline") out = demo_pipeline(c.seed);
  else if (scenario == "approx") out = demo_approx(c.seed);
  else if (scenario == "all") {
    out["roundtrip"] = demo_roundtrip(c.seed);
    out["projection"] = demo_projection(c.seed);
    out["pushforward"] = demo_pushforward(c.seed);
    out["lambda"] = demo_lambda(c.seed);
    out["term"] = demo_term(c.seed);
    out["pipeline"] = demo_pipeline(c.seed);
    out["approx"] = demo_approx(c.seed);
  } else {
    throw MalformedCondition("unknown demo scenario: " + scenario);
  }
  return emit(c, out, kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite laboratory for Cohen-poset codecs, projections, "
               "generic filters, and approximation checks"};
  app.require_subcommand(1);

  Common c_codec, c_project, c_lift, c_verify, c_generic, c_push, c_term,
      c_assemble, c_approx, c_demo;
  auto apply_env = [](Common& c) {
    if (const char* env = std::getenv("COHENLAB_BUDGET"))
      c.budget = std::strtoull(env, nullptr, 10);
  };
  for (Common* c : {&c_codec, &c_project, &c_lift, &c_verify, &c_generic,
                    &c_push, &c_term, &c_assemble, &c_approx, &c_demo})
    apply_env(*c);

  std::string codec_action;
  bool codec_loose = false;
  auto* codec = app.add_subcommand("codec", "block codecs and densify");
  codec->add_option("action", codec_action,
                    "decode|encode|densify|decode-lambda|encode-lambda")
      ->required();
  codec->add_flag("--loose", codec_loose, "tolerate bits after the last marker");
  add_common(codec, c_codec);

  std::string project_dict = "identity";
  int project_lambda = 0;
  auto* project = app.add_subcommand("project", "apply a projection map");
  project->add_option("--dict", project_dict, "identity|bitflip|seeded");
  project->add_option("--lambda", project_lambda,
                      "coordinate count (0 = single-sequence mode)");
  add_common(project, c_project);

  std::string lift_dict = "identity";
  std::string lift_to;
  int lift_lambda = 0;
  auto* lift = app.add_subcommand("lift", "canonical lifting witness");
  lift->add_option("--dict", lift_dict, "identity|bitflip|seeded");
  lift->add_option("--to", lift_to, "codomain target")->required();
  lift->add_option("--lambda", lift_lambda,
                   "coordinate count (0 = single-sequence mode)");
  add_common(lift, c_lift);

  std::string verify_sel = "identity-split";
  std::string verify_poset;
  int verify_lambda = 0;
  std::size_t verify_extra = 4;
  auto* verify = app.add_subcommand("verify", "projection axiom sweep");
  verify->add_option("--projection", verify_sel,
                     "<dict>-split | <dict>-lambda | term | cohen-term");
  verify->add_option("--poset", verify_poset,
                     "diamond|chainN|flatN|JSON (term projections)");
  verify->add_option("--lambda", verify_lambda, "coordinate count");
  verify->add_option("--cod-extra", verify_extra,
                     "codomain growth above each image");
  add_common(verify, c_verify);
  c_verify.bound = 9;

  auto* generic = app.add_subcommand("generic", "build a generic filter");
  add_common(generic, c_generic);

  std::string push_dict = "identity";
  int push_lambda = 0;
  auto* push = app.add_subcommand("push", "push a filter through a projection");
  push->add_option("--dict", push_dict, "identity|bitflip|seeded");
  push->add_option("--lambda", push_lambda,
                   "coordinate count (0 = single-sequence mode)");
  add_common(push, c_push);

  std::string term_action;
  std::string term_poset;
  int term_atom = 0;
  auto* term = app.add_subcommand("term", "term-forcing translations");
  term->add_option("action", term_action,
                   "to-cohen|from-cohen|eval|transfer|antichains")
      ->required();
  term->add_option("--poset", term_poset, "diamond|chainN|flatN|JSON");
  term->add_option("--atom", term_atom, "atom generating the base filter");
  add_common(term, c_term);

  auto* assemble =
      app.add_subcommand("assemble", "stage-wise iteration pipeline");
  add_common(assemble, c_assemble);

  auto* approx = app.add_subcommand("approx", "approximation property check");
  add_common(approx, c_approx);

  std::string demo_scenario = "all";
  auto* demo = app.add_subcommand("demo", "end-to-end scenarios");
  demo->add_option("scenario", demo_scenario,
                   "roundtrip|projection|pushforward|lambda|term|pipeline|"
                   "approx|all");
  add_common(demo, c_demo);

  CLI11_PARSE(app, argc, argv);

  try {
    if (codec->parsed()) return run_codec(c_codec, codec_action, codec_loose);
    if (project->parsed())
      return run_project(c_project, project_dict, project_lambda);
    if (lift->parsed()) return run_lift(c_lift, lift_dict, lift_lambda, lift_to);
    if (verify->parsed())
      return run_verify(c_verify, verify_sel, verify_poset, verify_lambda,
                        verify_extra);
    if (generic->parsed()) return run_generic(c_generic);
    if (push->parsed()) return run_push(c_push, push_lambda, push_dict);
    if (term->parsed()) return run_term(c_term, term_action, term_poset,
                                        term_atom);
    if (assemble->parsed()) return run_assemble(c_assemble);
    if (approx->parsed()) return run_approx(c_approx);
    if (demo->parsed()) return run_demo(c_demo, demo_scenario);
  } catch (const Json::exception& e) {
    std::cout << Json{{"error", "bad-json"}, {"detail", e.what()}}.dump()
              << "\n";
    return kInputError;
  } catch (const NotDense& e) {
    std::cout << Json{{"error", "not-dense"}, {"detail", e.what()}}.dump()
              << "\n";
    return kCounterexample;
  } catch (const StageFailure& e) {
    std::cout << Json{{"error", "stage-failure"}, {"detail", e.what()}}.dump()
              << "\n";
    return kCounterexample;
  } catch (const CohenError& e) {
    std::cout << Json{{"error", "input"}, {"detail", e.what()}}.dump() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "internal"}, {"detail", e.what()}}.dump()
              << "\n";
    return kInputError;
  }
  return kInputError;
}
