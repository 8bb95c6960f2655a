// Command-line front end: JSON in, JSON certificates and reports out.
//
// Exit codes: 0 success, 1 verified-negative result (not good, no witness,
// construction stuck, bound failed), 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cofinal/json_io.hpp"

namespace {

using namespace cofinal;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// input spec: '-' for stdin, inline JSON when it starts like JSON, else a path
Json load_input(const std::string& spec) {
  if (spec == "-") return parse_json_text(read_stream(std::cin));
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) {
    return parse_json_text(spec);
  }
  std::ifstream file(spec);
  if (!file) fail(Errc::InvalidInput, "cannot open input file " + spec);
  return parse_json_text(read_stream(file));
}

struct Output {
  std::string path;  // empty -> stdout

  void emit(const std::string& command, const Json& flags, const Json& result) const {
    Json envelope;
    envelope["schema"] = kSchemaTag;
    envelope["command"] = command;
    envelope["flags"] = flags;
    envelope["result"] = result;
    std::string text = dump_canonical(envelope);
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) fail(Errc::InvalidInput, "cannot open output file " + path);
      file << text;
    }
  }
};

struct CommonFlags {
  std::string input = "-";
  std::string out;
  std::size_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--input,-i", flags.input, "input path, '-' for stdin, or inline JSON");
  cmd->add_option("--out,-o", flags.out, "output path (default stdout)");
  cmd->add_option("--jobs,-j", flags.jobs, "worker threads for sweeps")->default_val(1);
}

struct LimitFlags {
  std::uint64_t pair_cap = 1'000'000;
  std::size_t part_cap = 4;
  std::size_t candidate_cap = 1024;

  GoodnessLimits limits() const { return {pair_cap, part_cap, candidate_cap, false}; }
  Json flags() const {
    return Json{{"pair_cap", pair_cap}, {"part_cap", part_cap}, {"candidate_cap", candidate_cap}};
  }
};

void add_limits(CLI::App* cmd, LimitFlags& flags) {
  cmd->add_option("--pair-cap", flags.pair_cap, "quantified (b,B) pair cap")->default_val(1'000'000);
  cmd->add_option("--part-cap", flags.part_cap, "finite-part size cap for lemma searches")
      ->default_val(4);
  cmd->add_option("--candidate-cap", flags.candidate_cap, "extension candidates examined")
      ->default_val(1024);
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for pair partitions over finite-set lattices"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // eh-extract ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("eh-extract", "greedy end-homogeneous extraction on a chain");
    auto flags = std::make_shared<CommonFlags>();
    add_common(cmd, *flags);
    cmd->callback([flags, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      Chain chain = chain_from_json(in.contains("chain") ? in["chain"] : Json());
      auto cert = extract_end_homogeneous(F, chain);
      Output{flags->out}.emit("eh-extract", Json::object(),
                              eh_certificate_to_json(cert, F));
      exit_code = kExitOk;
    });
  }

  // homog --------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("homog", "refine an end-homogeneous certificate");
    auto flags = std::make_shared<CommonFlags>();
    add_common(cmd, *flags);
    cmd->callback([flags, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      auto eh = eh_certificate_from_json(in.contains("certificate") ? in["certificate"] : Json());
      auto cert = extract_homogeneous(F, eh);
      Output{flags->out}.emit("homog", Json::object(),
                              homogeneous_certificate_to_json(cert, F));
      exit_code = kExitOk;
    });
  }

  // countable-cofinal ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("countable-cofinal",
                                   "prefix-chain construction on an enumerated ground set");
    auto flags = std::make_shared<CommonFlags>();
    auto steps = std::make_shared<std::size_t>(8);
    add_common(cmd, *flags);
    cmd->add_option("--steps,-n", *steps, "chain length")->default_val(8);
    cmd->callback([flags, steps, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      CofinalHomogeneous result;
      if (in.contains("ground")) {
        if (!in["ground"].is_array()) fail(Errc::InvalidInput, "ground: expected a label array");
        std::vector<Label> labels;
        for (std::size_t i = 0; i < in["ground"].size(); ++i) {
          labels.push_back(in["ground"][i].get<Label>());
        }
        if (labels.size() < *steps) fail(Errc::InvalidInput, "ground enumeration too short");
        result = countable_cofinal_homogeneous(
            F, [labels](std::size_t i) { return labels[i]; }, *steps);
      } else {
        result = countable_cofinal_homogeneous(F, *steps);
      }
      Output{flags->out}.emit("countable-cofinal", Json{{"steps", *steps}},
                              cofinal_homogeneous_to_json(result, F));
      exit_code = kExitOk;
    });
  }

  // good-check -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("good-check", "bounded goodness of (a,A) for f");
    auto flags = std::make_shared<CommonFlags>();
    auto limits = std::make_shared<LimitFlags>();
    auto width = std::make_shared<int>(3);
    auto reserve = std::make_shared<int>(1);
    add_common(cmd, *flags);
    add_limits(cmd, *limits);
    cmd->add_option("--width,-w", *width, "window width")->default_val(3);
    cmd->add_option("--reserve,-r", *reserve, "reserved free labels")->default_val(1);
    cmd->callback([flags, limits, width, reserve, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      AnchoredPair p = pair_from_json(in.contains("pair") ? in["pair"] : Json());
      PartialColoring f = partial_from_json(in.contains("partial") ? in["partial"] : Json());
      Window win(*width, *reserve);
      GoodnessLimits lim = limits->limits();
      lim.retain_witnesses = false;
      auto verdict = is_good_bounded(F, p, f, win, lim);
      Json fl = limits->flags();
      fl["width"] = *width;
      fl["reserve"] = *reserve;
      Output{flags->out}.emit("good-check", fl, goodness_verdict_to_json(verdict));
      exit_code = verdict.good ? kExitOk : kExitNegative;
    });
  }

  // lemma22 / lemma23 -----------------------------------------------------------
  for (bool with_f : {false, true}) {
    auto* cmd = app.add_subcommand(with_f ? "lemma23" : "lemma22",
                                   with_f ? "extension search with a coloring to extend"
                                          : "good-pair extension search");
    auto flags = std::make_shared<CommonFlags>();
    auto limits = std::make_shared<LimitFlags>();
    auto width = std::make_shared<int>(4);
    auto reserve = std::make_shared<int>(1);
    add_common(cmd, *flags);
    add_limits(cmd, *limits);
    cmd->add_option("--width,-w", *width, "window width")->default_val(4);
    cmd->add_option("--reserve,-r", *reserve, "reserved free labels")->default_val(1);
    cmd->callback([flags, limits, width, reserve, with_f, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      Window win(*width, *reserve);
      std::optional<LemmaWitness> witness;
      if (with_f) {
        AnchoredPair p = pair_from_json(in.contains("pair") ? in["pair"] : Json());
        PartialColoring f = partial_from_json(in.contains("partial") ? in["partial"] : Json());
        AnchoredPair q = pair_from_json(in.contains("target") ? in["target"] : Json(), "target");
        witness = lemma23_search(F, p, f, q, win, limits->limits());
      } else {
        AnchoredPair q = pair_from_json(in.contains("pair") ? in["pair"] : Json());
        witness = lemma22_search(F, q, win, limits->limits());
      }
      Json result;
      result["found"] = witness.has_value();
      if (witness) result["witness"] = lemma_witness_to_json(*witness);
      Json fl = limits->flags();
      fl["width"] = *width;
      fl["reserve"] = *reserve;
      Output{flags->out}.emit(with_f ? "lemma23" : "lemma22", fl, result);
      exit_code = witness ? kExitOk : kExitNegative;
    });
  }

  // approx-build ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("approx-build", "build an approximation");
    auto flags = std::make_shared<CommonFlags>();
    auto limits = std::make_shared<LimitFlags>();
    auto width = std::make_shared<int>(40);
    auto reserve = std::make_shared<int>(2);
    auto depth = std::make_shared<std::size_t>(6);
    add_common(cmd, *flags);
    add_limits(cmd, *limits);
    cmd->add_option("--width,-w", *width, "window width")->default_val(40);
    cmd->add_option("--reserve,-r", *reserve, "reserved free labels")->default_val(2);
    cmd->add_option("--depth,-n", *depth, "construction steps")->default_val(6);
    cmd->callback([flags, limits, width, reserve, depth, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      Window win(*width, *reserve);
      Json fl = limits->flags();
      fl["width"] = *width;
      fl["reserve"] = *reserve;
      fl["depth"] = *depth;
      try {
        Approximation approx = build_approximation(F, win, *depth, limits->limits());
        Output{flags->out}.emit("approx-build", fl, approximation_to_json(approx));
        exit_code = kExitOk;
      } catch (const StuckError& e) {
        Json result;
        result["stuck"] = true;
        result["reason"] = e.what();
        result["partial_log"] = approximation_steps_to_json(e.partial_log);
        Output{flags->out}.emit("approx-build", fl, result);
        exit_code = kExitNegative;
      }
    });
  }

  // approx-extend ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("approx-extend", "extend an approximation past a fresh label");
    auto flags = std::make_shared<CommonFlags>();
    auto limits = std::make_shared<LimitFlags>();
    auto width = std::make_shared<int>(40);
    auto reserve = std::make_shared<int>(2);
    auto depth = std::make_shared<std::size_t>(3);
    auto xi = std::make_shared<Label>(0);
    add_common(cmd, *flags);
    add_limits(cmd, *limits);
    cmd->add_option("--width,-w", *width, "window width")->default_val(40);
    cmd->add_option("--reserve,-r", *reserve, "reserved free labels")->default_val(2);
    cmd->add_option("--depth,-n", *depth, "extension steps")->default_val(3);
    cmd->add_option("--xi", *xi, "fresh label to absorb")->required();
    cmd->callback([flags, limits, width, reserve, depth, xi, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      Approximation approx =
          approximation_from_json(in.contains("approximation") ? in["approximation"] : Json());
      Window win(*width, *reserve);
      Json fl = limits->flags();
      fl["width"] = *width;
      fl["reserve"] = *reserve;
      fl["depth"] = *depth;
      fl["xi"] = *xi;
      try {
        Approximation extended = extend_approximation(F, approx, *xi, win, *depth, limits->limits());
        Output{flags->out}.emit("approx-extend", fl, approximation_to_json(extended));
        exit_code = kExitOk;
      } catch (const StuckError& e) {
        Json result;
        result["stuck"] = true;
        result["reason"] = e.what();
        result["partial_log"] = approximation_steps_to_json(e.partial_log);
        Output{flags->out}.emit("approx-extend", fl, result);
        exit_code = kExitNegative;
      }
    });
  }

  // approx-verify ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("approx-verify", "check the four approximation clauses");
    auto flags = std::make_shared<CommonFlags>();
    auto limits = std::make_shared<LimitFlags>();
    auto width = std::make_shared<int>(40);
    auto reserve = std::make_shared<int>(2);
    add_common(cmd, *flags);
    add_limits(cmd, *limits);
    cmd->add_option("--width,-w", *width, "window width")->default_val(40);
    cmd->add_option("--reserve,-r", *reserve, "reserved free labels")->default_val(2);
    cmd->callback([flags, limits, width, reserve, &exit_code] {
      Json in = load_input(flags->input);
      PairColoring F = coloring_from_json(in.contains("coloring") ? in["coloring"] : Json());
      Approximation approx =
          approximation_from_json(in.contains("approximation") ? in["approximation"] : Json());
      Window win(*width, *reserve);
      auto report = verify_approximation(F, approx, win, limits->limits());
      Json fl = limits->flags();
      fl["width"] = *width;
      fl["reserve"] = *reserve;
      Output{flags->out}.emit("approx-verify", fl, approximation_report_to_json(report));
      exit_code = report.all() ? kExitOk : kExitNegative;
    });
  }

  // laver-build -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("laver-build", "run the adversarial construction");
    auto flags = std::make_shared<CommonFlags>();
    add_common(cmd, *flags);
    cmd->callback([flags, &exit_code] {
      Json in = load_input(flags->input);
      LaverRegistry registry = laver_registry_from_json(in);
      LaverState state = laver_build(registry);
      Output{flags->out}.emit("laver-build", Json::object(), laver_state_to_json(state));
      exit_code = kExitOk;
    });
  }

  // laver-verify ----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("laver-verify",
                                   "witnesses against the family registered at beta");
    auto flags = std::make_shared<CommonFlags>();
    auto beta = std::make_shared<Label>(0);
    auto default_color = std::make_shared<Color>(1);
    add_common(cmd, *flags);
    cmd->add_option("--beta,-b", *beta, "registered index to attack")->required();
    cmd->add_option("--default-color", *default_color, "color of unconstrained pairs")
        ->default_val(1);
    cmd->callback([flags, beta, default_color, &exit_code] {
      Json in = load_input(flags->input);
      LaverRegistry registry = laver_registry_from_json(in);
      LaverState state = laver_build(registry);
      PairColoring F = laver_complete(state, *default_color);
      auto witnesses = laver_verify(state, F, *beta);
      Json fl;
      fl["beta"] = *beta;
      fl["default_color"] = *default_color;
      Json result;
      result["witnesses"] = laver_witnesses_to_json(witnesses);
      result["count"] = witnesses.size();
      Output{flags->out}.emit("laver-verify", fl, result);
      exit_code = witnesses.empty() ? kExitNegative : kExitOk;
    });
  }

  // sweep -----------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("sweep", "search every coloring of a subset-lattice window");
    auto flags = std::make_shared<CommonFlags>();
    auto opts = std::make_shared<SweepOptions>();
    auto mode = std::make_shared<std::string>("exhaustive");
    auto interior = std::make_shared<std::string>("all");
    add_common(cmd, *flags);
    cmd->add_option("--width,-w", opts->window, "window width")->default_val(2);
    cmd->add_option("--colors,-k", opts->k, "color count")->default_val(2);
    cmd->add_option("--mode", *mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->default_val("exhaustive");
    cmd->add_option("--seed", opts->seed, "sample seed")->default_val(0);
    cmd->add_option("--samples", opts->samples, "sample count")->default_val(0);
    cmd->add_option("--min-chain", opts->min_chain, "required chain length inside H")
        ->default_val(1);
    cmd->add_option("--interior", *interior,
                    "'all' or comma-separated node ids the subset must dominate")
        ->default_val("all");
    cmd->callback([flags, opts, mode, interior, &exit_code] {
      opts->exhaustive = *mode == "exhaustive";
      opts->jobs = flags->jobs;
      if (*interior != "all") {
        std::vector<std::size_t> nodes;
        std::stringstream stream(*interior);
        std::string item;
        while (std::getline(stream, item, ',')) {
          if (!item.empty()) nodes.push_back(std::stoul(item));
        }
        opts->interior = std::move(nodes);
      }
      SweepReport report = sweep_colorings(*opts);
      Json fl;
      fl["width"] = opts->window;
      fl["k"] = opts->k;
      fl["mode"] = *mode;
      fl["min_chain"] = opts->min_chain;
      fl["interior"] = *interior;
      if (!opts->exhaustive) {
        fl["seed"] = opts->seed;
        fl["samples"] = opts->samples;
      }
      Output{flags->out}.emit("sweep", fl, sweep_report_to_json(report));
      exit_code = kExitOk;
    });
  }

  // char-width -------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("char-width", "finite-character diagnostic");
    auto flags = std::make_shared<CommonFlags>();
    auto bound = std::make_shared<std::size_t>(0);
    auto exact = std::make_shared<bool>(false);
    add_common(cmd, *flags);
    cmd->add_option("--bound,-p", *bound, "allowed predecessor count")->default_val(0);
    cmd->add_flag("--exact", *exact, "exhaustive minimization (size <= 16)");
    cmd->callback([flags, bound, exact, &exit_code] {
      Json in = load_input(flags->input);
      CharWidthResult result;
      std::vector<std::string> labels;
      if (in.contains("generated")) {
        GeneratedPoset g = generated_from_json(in["generated"]);
        GeneratedPrefix prefix = materialize(g);
        labels = prefix.node_labels;
        result = char_width(prefix, *bound, *exact);
      } else {
        FinPoset poset = poset_from_json(in.contains("poset") ? in["poset"] : Json());
        labels = poset.node_labels();
        result = char_width(poset, *bound, *exact);
      }
      Json fl;
      fl["bound"] = *bound;
      fl["exact"] = *exact;
      Output{flags->out}.emit("char-width", fl, char_width_result_to_json(result, labels));
      exit_code = result.pass ? kExitOk : kExitNegative;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cofinal::StuckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const cofinal::Error& e) {
    std::cerr << "error (" << cofinal::errc_name(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case cofinal::Errc::CapExceeded:
      case cofinal::Errc::SizeLimit:
      case cofinal::Errc::WindowExhausted:
        return kExitResource;
      case cofinal::Errc::ConstructionStuck:
        return kExitNegative;
      default:
        return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
