#include "cofinal/json_io.hpp"

#include <algorithm>

namespace cofinal {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(Errc::InvalidInput, path + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t need_uint(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                 j.get<std::int64_t>() < 0)) {
    bad(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

int need_color(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected a color index");
  int c = j.get<int>();
  if (c < 1) bad(path, "colors are 1-based");
  return c;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::MalformedJson, "input is not well-formed JSON");
  return j;
}

FinSet finset_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of labels");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    labels.push_back(static_cast<Label>(need_uint(j[i], path + "[" + std::to_string(i) + "]")));
  }
  try {
    return FinSet::from_sorted(std::move(labels));
  } catch (const Error&) {
    bad(path, "not in canonical ascending order");
  }
}

Json finset_to_json(const FinSet& s) {
  Json out = Json::array();
  for (Label x : s.labels()) out.push_back(x);
  return out;
}

std::vector<FinSet> family_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of sets");
  std::vector<FinSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(finset_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json family_to_json(const std::vector<FinSet>& family) {
  Json out = Json::array();
  for (const FinSet& s : family) out.push_back(finset_to_json(s));
  return out;
}

PairColoring coloring_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a coloring object");
  int k = static_cast<int>(need_uint(need(j, "k", path), path + ".k"));
  if (j.contains("rule")) {
    const Json& r = j["rule"];
    if (!r.is_string()) bad(path + ".rule", "expected a rule name");
    auto rule = rule_from_name(r.get<std::string>());
    if (!rule) fail(Errc::UnknownRule, path + ".rule: unknown rule " + r.get<std::string>());
    return PairColoring::from_rule(*rule, k);
  }
  if (j.contains("table")) {
    int window = static_cast<int>(need_uint(need(j, "window", path), path + ".window"));
    std::map<std::pair<FinSet, FinSet>, Color> entries;
    const Json& table = j["table"];
    if (!table.is_array()) bad(path + ".table", "expected an array of [x,y,color] triples");
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::string at = path + ".table[" + std::to_string(i) + "]";
      if (!table[i].is_array() || table[i].size() != 3) bad(at, "expected [x,y,color]");
      FinSet x = finset_from_json(table[i][0], at + "[0]");
      FinSet y = finset_from_json(table[i][1], at + "[1]");
      if (!entries.insert({{std::move(x), std::move(y)}, need_color(table[i][2], at + "[2]")})
               .second) {
        bad(at, "duplicate pair");
      }
    }
    return PairColoring::from_table(k, window, std::move(entries));
  }
  if (j.contains("constraints")) {
    std::map<std::pair<FinSet, FinSet>, Color> entries;
    const Json& cons = j["constraints"];
    if (!cons.is_array()) bad(path + ".constraints", "expected an array of [x,y,color] triples");
    for (std::size_t i = 0; i < cons.size(); ++i) {
      std::string at = path + ".constraints[" + std::to_string(i) + "]";
      if (!cons[i].is_array() || cons[i].size() != 3) bad(at, "expected [x,y,color]");
      FinSet x = finset_from_json(cons[i][0], at + "[0]");
      FinSet y = finset_from_json(cons[i][1], at + "[1]");
      auto [it, inserted] =
          entries.insert({{std::move(x), std::move(y)}, need_color(cons[i][2], at + "[2]")});
      if (!inserted && it->second != cons[i][2].get<Color>()) {
        fail(Errc::ConflictingConstraint, at + ": pair constrained twice");
      }
    }
    Color fallback = need_color(need(j, "default", path), path + ".default");
    return PairColoring::from_constraints(k, std::move(entries), fallback);
  }
  bad(path, "coloring needs one of 'rule', 'table', 'constraints'");
}

Json coloring_to_json(const PairColoring& F) {
  Json out;
  out["k"] = F.k();
  if (const Rule* r = F.rule()) {
    out["rule"] = rule_name(*r);
  } else if (const PairColoring::Table* t = F.table()) {
    out["window"] = t->window;
    Json table = Json::array();
    for (const auto& [key, color] : t->entries) {
      table.push_back(Json::array({finset_to_json(key.first), finset_to_json(key.second), color}));
    }
    out["table"] = std::move(table);
  } else if (const PairColoring::Constraints* c = F.constraints()) {
    Json cons = Json::array();
    for (const auto& [key, color] : c->entries) {
      cons.push_back(Json::array({finset_to_json(key.first), finset_to_json(key.second), color}));
    }
    out["constraints"] = std::move(cons);
    out["default"] = c->fallback;
  }
  return out;
}

PartialColoring partial_from_json(const Json& j, const std::string& path) {
  FinSet base = finset_from_json(need(j, "base", path), path + ".base");
  PartialColoring f(base);
  const Json& map = need(j, "map", path);
  if (!map.is_array()) bad(path + ".map", "expected an array of [subset,color] pairs");
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::string at = path + ".map[" + std::to_string(i) + "]";
    if (!map[i].is_array() || map[i].size() != 2) bad(at, "expected [subset,color]");
    FinSet key = finset_from_json(map[i][0], at + "[0]");
    if (!key.subset_of(base)) bad(at, "key not a subset of the base");
    if (f.at(key)) bad(at, "duplicate key");
    f.assign(key, need_color(map[i][1], at + "[1]"));
  }
  return f;
}

Json partial_to_json(const PartialColoring& f) {
  Json out;
  out["base"] = finset_to_json(f.base());
  Json map = Json::array();
  for (const auto& [key, color] : f.items()) {
    map.push_back(Json::array({finset_to_json(key), color}));
  }
  out["map"] = std::move(map);
  return out;
}

AnchoredPair pair_from_json(const Json& j, const std::string& path) {
  FinSet part = finset_from_json(need(j, "part", path), path + ".part");
  FinSet ground = finset_from_json(need(j, "ground", path), path + ".ground");
  if (!part.subset_of(ground)) bad(path, "part not a subset of ground");
  return AnchoredPair(std::move(part), std::move(ground));
}

Json pair_to_json(const AnchoredPair& p) {
  Json out;
  out["part"] = finset_to_json(p.part);
  out["ground"] = finset_to_json(p.ground);
  return out;
}

Chain chain_from_json(const Json& j, const std::string& path) {
  std::vector<FinSet> sets = family_from_json(j, path);
  try {
    return Chain(std::move(sets));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json chain_to_json(const Chain& chain) { return family_to_json(chain.sets()); }

EndHomogeneousCertificate eh_certificate_from_json(const Json& j, const std::string& path) {
  EndHomogeneousCertificate cert;
  cert.subsequence = chain_from_json(need(j, "chain", path), path + ".chain");
  const Json& colors = need(j, "end_colors", path);
  if (!colors.is_array()) bad(path + ".end_colors", "expected an array of colors");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    cert.end_colors.push_back(
        need_color(colors[i], path + ".end_colors[" + std::to_string(i) + "]"));
  }
  return cert;
}

Json eh_certificate_to_json(const EndHomogeneousCertificate& cert, const PairColoring& F) {
  Json out;
  out["chain"] = chain_to_json(cert.subsequence);
  out["end_colors"] = cert.end_colors;
  auto violations = cert.verify(F);
  Json v = Json::array();
  for (auto [i, j] : violations) v.push_back(Json::array({i, j}));
  out["violations"] = std::move(v);
  out["verified"] = violations.empty();
  return out;
}

Json homogeneous_certificate_to_json(const HomogeneousCertificate& cert, const PairColoring& F) {
  Json out;
  out["members"] = family_to_json(cert.members);
  out["color"] = cert.color;
  out["checked_pairs"] = cert.checked_pairs;
  out["verified"] = cert.verify(F).empty();
  return out;
}

Json cofinal_homogeneous_to_json(const CofinalHomogeneous& result, const PairColoring& F) {
  Json out;
  out["certificate"] = homogeneous_certificate_to_json(result.certificate, F);
  out["chain"] = chain_to_json(result.chain);
  out["coverage"] = result.coverage;
  return out;
}

Json goodness_verdict_to_json(const GoodnessVerdict& verdict) {
  Json out;
  out["good"] = verdict.good;
  out["quantified_pairs"] = verdict.quantified_pairs;
  if (verdict.counterexample) {
    out["counterexample"] = pair_to_json(*verdict.counterexample);
  }
  if (!verdict.extension_map.empty()) {
    Json witnesses = Json::array();
    for (const auto& [pair, c] : verdict.extension_map) {
      Json w;
      w["pair"] = pair_to_json(pair);
      w["extension"] = finset_to_json(c);
      witnesses.push_back(std::move(w));
    }
    out["extension_map"] = std::move(witnesses);
  }
  return out;
}

Json lemma_witness_to_json(const LemmaWitness& witness) {
  Json out;
  out["g"] = partial_to_json(witness.g);
  out["c"] = finset_to_json(witness.c);
  out["C"] = finset_to_json(witness.C);
  out["quantified_pairs"] = witness.quantified_pairs;
  return out;
}

Approximation approximation_from_json(const Json& j, const std::string& path) {
  Approximation approx;
  approx.ground_prefix = finset_from_json(need(j, "ground_prefix", path), path + ".ground_prefix");
  approx.G = family_from_json(need(j, "G", path), path + ".G");
  approx.H = family_from_json(need(j, "H", path), path + ".H");
  approx.green = need_color(need(j, "green", path), path + ".green");
  const Json& log = need(j, "log", path);
  if (!log.is_array()) bad(path + ".log", "expected an array of steps");
  for (std::size_t i = 0; i < log.size(); ++i) {
    std::string at = path + ".log[" + std::to_string(i) + "]";
    ApproximationStep step;
    step.b = finset_from_json(need(log[i], "b", at), at + ".b");
    step.g = partial_from_json(need(log[i], "g", at), at + ".g");
    step.c = finset_from_json(need(log[i], "c", at), at + ".c");
    step.C = finset_from_json(need(log[i], "C", at), at + ".C");
    approx.log.push_back(std::move(step));
  }
  return approx;
}

Json approximation_steps_to_json(const std::vector<ApproximationStep>& log) {
  Json steps = Json::array();
  for (const auto& step : log) {
    Json s;
    s["b"] = finset_to_json(step.b);
    s["g"] = partial_to_json(step.g);
    s["c"] = finset_to_json(step.c);
    s["C"] = finset_to_json(step.C);
    steps.push_back(std::move(s));
  }
  return steps;
}

Json approximation_to_json(const Approximation& approx) {
  Json out;
  out["schema"] = kSchemaTag;
  out["ground_prefix"] = finset_to_json(approx.ground_prefix);
  out["G"] = family_to_json(approx.G);
  out["H"] = family_to_json(approx.H);
  out["green"] = approx.green;
  out["log"] = approximation_steps_to_json(approx.log);
  return out;
}

Json approximation_report_to_json(const ApproximationReport& report) {
  auto clause = [](const ClauseReport& c) {
    Json out;
    out["pass"] = c.pass;
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
  };
  Json out;
  out["disjoint"] = clause(report.disjoint);
  out["dominance"] = clause(report.dominance);
  out["end_homogeneous"] = clause(report.end_homogeneous);
  out["goodness"] = clause(report.goodness);
  out["coverage_G"] = report.coverage_G;
  out["coverage_H"] = report.coverage_H;
  out["pass"] = report.all();
  return out;
}

LaverRegistry laver_registry_from_json(const Json& j, const std::string& path) {
  LaverRegistry registry;
  registry.ground_size =
      static_cast<Label>(need_uint(need(j, "ground_size", path), path + ".ground_size"));
  if (j.contains("a")) {
    const Json& a = j["a"];
    if (!a.is_array()) bad(path + ".a", "expected an array of [alpha, set] pairs");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string at = path + ".a[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != 2) bad(at, "expected [alpha, set]");
      Label alpha = static_cast<Label>(need_uint(a[i][0], at + "[0]"));
      if (registry.a.count(alpha)) bad(at, "duplicate alpha");
      registry.a[alpha] = finset_from_json(a[i][1], at + "[1]");
    }
  }
  if (j.contains("mh")) {
    const Json& mh = j["mh"];
    if (!mh.is_array()) bad(path + ".mh", "expected an array of [alpha, {M,H}] pairs");
    for (std::size_t i = 0; i < mh.size(); ++i) {
      std::string at = path + ".mh[" + std::to_string(i) + "]";
      if (!mh[i].is_array() || mh[i].size() != 2) bad(at, "expected [alpha, {M,H}]");
      Label alpha = static_cast<Label>(need_uint(mh[i][0], at + "[0]"));
      if (registry.mh.count(alpha)) bad(at, "duplicate alpha");
      LaverRegistry::MH entry;
      entry.M = finset_from_json(need(mh[i][1], "M", at + "[1]"), at + "[1].M");
      entry.H = family_from_json(need(mh[i][1], "H", at + "[1]"), at + "[1].H");
      std::sort(entry.H.begin(), entry.H.end(), SizeLexLess{});
      registry.mh[alpha] = std::move(entry);
    }
  }
  registry.validate();
  return registry;
}

Json laver_registry_to_json(const LaverRegistry& registry) {
  Json out;
  out["ground_size"] = registry.ground_size;
  Json a = Json::array();
  for (const auto& [alpha, set] : registry.a) {
    a.push_back(Json::array({alpha, finset_to_json(set)}));
  }
  out["a"] = std::move(a);
  Json mh = Json::array();
  for (const auto& [alpha, entry] : registry.mh) {
    Json e;
    e["M"] = finset_to_json(entry.M);
    e["H"] = family_to_json(entry.H);
    mh.push_back(Json::array({alpha, std::move(e)}));
  }
  out["mh"] = std::move(mh);
  return out;
}

Json laver_state_to_json(const LaverState& state) {
  Json out;
  out["schema"] = kSchemaTag;
  out["registry"] = laver_registry_to_json(state.registry);
  Json built = Json::array();
  for (const auto& [alpha, s] : state.built) {
    built.push_back(Json::array({alpha, finset_to_json(s)}));
  }
  out["built"] = std::move(built);
  Json constraints = Json::array();
  for (const auto& [key, color] : state.constraints) {
    constraints.push_back(
        Json::array({finset_to_json(key.first), finset_to_json(key.second), color}));
  }
  out["constraints"] = std::move(constraints);
  Json log = Json::array();
  for (const auto& [alpha, walk] : state.choice_log) {
    Json steps = Json::array();
    for (const ChoiceRecord& record : walk) {
      Json s;
      s["position"] = record.position;
      s["success"] = record.success;
      if (record.success) {
        s["c"] = finset_to_json(record.c);
        s["d"] = finset_to_json(record.d);
      }
      steps.push_back(std::move(s));
    }
    log.push_back(Json::array({alpha, std::move(steps)}));
  }
  out["choice_log"] = std::move(log);
  return out;
}

Json laver_witnesses_to_json(const std::vector<NonHomogeneityWitness>& witnesses) {
  Json out = Json::array();
  for (const auto& w : witnesses) {
    Json e;
    e["beta"] = w.beta;
    e["s"] = finset_to_json(w.s);
    e["c"] = finset_to_json(w.c);
    e["d"] = finset_to_json(w.d);
    e["colors"] = Json::array({1, 2});
    out.push_back(std::move(e));
  }
  return out;
}

FinPoset poset_from_json(const Json& j, const std::string& path) {
  const Json& elements = need(j, "elements", path);
  if (!elements.is_array()) bad(path + ".elements", "expected an array of node ids");
  // node ids are opaque integers; lt edges reference them, not positions
  std::vector<std::string> labels;
  std::map<std::uint64_t, std::size_t> index_of;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::uint64_t id = need_uint(elements[i], path + ".elements[" + std::to_string(i) + "]");
    if (!index_of.insert({id, i}).second) {
      bad(path + ".elements[" + std::to_string(i) + "]", "duplicate node id");
    }
    labels.push_back(std::to_string(id));
  }
  const Json& lt = need(j, "lt", path);
  if (!lt.is_array()) bad(path + ".lt", "expected an array of [i,j] pairs");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    std::string at = path + ".lt[" + std::to_string(i) + "]";
    if (!lt[i].is_array() || lt[i].size() != 2) bad(at, "expected [i,j]");
    auto lo = index_of.find(need_uint(lt[i][0], at + "[0]"));
    auto hi = index_of.find(need_uint(lt[i][1], at + "[1]"));
    if (lo == index_of.end() || hi == index_of.end()) bad(at, "edge references unknown node id");
    edges.emplace_back(lo->second, hi->second);
  }
  try {
    return FinPoset(elements.size(), edges, std::move(labels));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json poset_to_json(const FinPoset& poset) {
  Json out;
  Json elements = Json::array();
  auto id_at = [&](std::size_t i) -> std::uint64_t {
    if (i < poset.node_labels().size()) {
      const std::string& label = poset.node_labels()[i];
      if (!label.empty() && label.find_first_not_of("0123456789") == std::string::npos) {
        return std::stoull(label);
      }
    }
    return i;
  };
  for (std::size_t i = 0; i < poset.size(); ++i) elements.push_back(id_at(i));
  out["elements"] = std::move(elements);
  Json lt = Json::array();
  for (auto [i, j] : poset.generators()) lt.push_back(Json::array({id_at(i), id_at(j)}));
  out["lt"] = std::move(lt);
  return out;
}

GeneratedPoset generated_from_json(const Json& j, const std::string& path) {
  GeneratedPoset g;
  const Json& name = need(j, "generator", path);
  if (!name.is_string()) bad(path + ".generator", "expected a generator name");
  std::string s = name.get<std::string>();
  if (s == "SUBSET_LATTICE") {
    g.kind = GeneratedPoset::Kind::SubsetLattice;
  } else if (s == "ORDINAL_SUM") {
    g.kind = GeneratedPoset::Kind::OrdinalSum;
  } else if (s == "PRODUCT") {
    g.kind = GeneratedPoset::Kind::Product;
  } else {
    fail(Errc::UnknownRule, path + ".generator: unknown generator " + s);
  }
  g.depth = static_cast<int>(need_uint(need(j, "depth", path), path + ".depth"));
  if (g.kind == GeneratedPoset::Kind::Product) {
    const Json& factors = need(j, "factors", path);
    if (!factors.is_array() || factors.size() != 2) {
      bad(path + ".factors", "product needs exactly two factors");
    }
    g.factors.push_back(generated_from_json(factors[0], path + ".factors[0]"));
    g.factors.push_back(generated_from_json(factors[1], path + ".factors[1]"));
  }
  return g;
}

Json generated_to_json(const GeneratedPoset& g) {
  Json out;
  out["generator"] = GeneratedPoset::kind_name(g.kind);
  out["depth"] = g.depth;
  if (g.kind == GeneratedPoset::Kind::Product) {
    Json factors = Json::array();
    for (const auto& f : g.factors) factors.push_back(generated_to_json(f));
    out["factors"] = std::move(factors);
  }
  return out;
}

Json sweep_report_to_json(const SweepReport& report) {
  Json out;
  out["schema"] = kSchemaTag;
  out["semantics"] =
      "parametrized finite search: the interior and min_chain knobs define the truncation";
  out["window"] = report.options.window;
  out["k"] = report.options.k;
  out["mode"] = report.options.exhaustive ? "exhaustive" : "sampled";
  if (!report.options.exhaustive) {
    out["seed"] = report.options.seed;
    out["samples"] = report.options.samples;
    out["prng"] = kPrngName;
  }
  out["min_chain"] = report.options.min_chain;
  if (report.options.interior) {
    out["interior"] = *report.options.interior;
  } else {
    out["interior"] = "all";
  }
  out["coloring_count"] = report.coloring_count;
  Json outcomes;
  outcomes["found"] = report.found;
  outcomes["none"] = report.none;
  out["outcomes"] = std::move(outcomes);
  Json by_color;
  for (const auto& [c, v] : report.found_by_color) by_color[std::to_string(c)] = v;
  out["found_by_color"] = std::move(by_color);
  Json histogram;
  for (const auto& [s, v] : report.h_size_histogram) histogram[std::to_string(s)] = v;
  out["h_size_histogram"] = std::move(histogram);
  return out;
}

Json monotonicity_report_to_json(const MonotonicityReport& report) {
  Json out;
  out["schema"] = kSchemaTag;
  out["colorings"] = report.colorings;
  out["combos_per_coloring"] = report.combos_per_coloring;
  out["violations"] = report.violations;
  if (!report.first_violation.empty()) out["first_violation"] = report.first_violation;
  return out;
}

Json char_width_result_to_json(const CharWidthResult& result,
                               const std::vector<std::string>& node_labels) {
  Json out;
  Json ids = Json::array();
  Json names = Json::array();
  for (std::size_t i : result.s_prime) {
    ids.push_back(i);
    if (i < node_labels.size()) names.push_back(node_labels[i]);
  }
  out["s_prime"] = std::move(ids);
  if (names.size() == result.s_prime.size()) out["s_prime_labels"] = std::move(names);
  out["max_preds"] = result.max_preds;
  out["pass"] = result.pass;
  out["mode"] = result.exact ? "exact" : "greedy";
  return out;
}

Json search_result_to_json(const std::optional<CofinalSearchResult>& result,
                           const std::vector<std::string>& node_labels) {
  Json out;
  out["found"] = result.has_value();
  if (result) {
    Json ids = Json::array();
    Json names = Json::array();
    for (std::size_t i : result->H) {
      ids.push_back(i);
      if (i < node_labels.size()) names.push_back(node_labels[i]);
    }
    out["H"] = std::move(ids);
    if (names.size() == result->H.size()) out["H_labels"] = std::move(names);
    out["color"] = result->color;
    out["chain_length"] = result->chain_length;
  }
  return out;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cofinal
