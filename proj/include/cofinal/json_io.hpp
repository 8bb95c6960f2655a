#pragma once

#include <json.hpp>

#include "cofinal/construction.hpp"
#include "cofinal/laver.hpp"
#include "cofinal/oracle.hpp"
#include "cofinal/ramsey.hpp"

namespace cofinal {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "cofinal/1";

// Parsing is strict: sets must be ascending, invariants are enforced, and
// messages carry the offending path. nlohmann parse failures surface as
// MalformedJson.
Json parse_json_text(const std::string& text);

FinSet finset_from_json(const Json& j, const std::string& path);
Json finset_to_json(const FinSet& s);

std::vector<FinSet> family_from_json(const Json& j, const std::string& path);
Json family_to_json(const std::vector<FinSet>& family);

PairColoring coloring_from_json(const Json& j, const std::string& path = "coloring");
Json coloring_to_json(const PairColoring& F);

PartialColoring partial_from_json(const Json& j, const std::string& path = "partial");
Json partial_to_json(const PartialColoring& f);

AnchoredPair pair_from_json(const Json& j, const std::string& path = "pair");
Json pair_to_json(const AnchoredPair& p);

Chain chain_from_json(const Json& j, const std::string& path = "chain");
Json chain_to_json(const Chain& chain);

EndHomogeneousCertificate eh_certificate_from_json(const Json& j,
                                                   const std::string& path = "certificate");
Json eh_certificate_to_json(const EndHomogeneousCertificate& cert, const PairColoring& F);

Json homogeneous_certificate_to_json(const HomogeneousCertificate& cert, const PairColoring& F);
Json cofinal_homogeneous_to_json(const CofinalHomogeneous& result, const PairColoring& F);

Json goodness_verdict_to_json(const GoodnessVerdict& verdict);
Json lemma_witness_to_json(const LemmaWitness& witness);

Approximation approximation_from_json(const Json& j, const std::string& path = "approximation");
Json approximation_to_json(const Approximation& approx);
Json approximation_report_to_json(const ApproximationReport& report);
Json approximation_steps_to_json(const std::vector<ApproximationStep>& log);

LaverRegistry laver_registry_from_json(const Json& j, const std::string& path = "registry");
Json laver_registry_to_json(const LaverRegistry& registry);
Json laver_state_to_json(const LaverState& state);
Json laver_witnesses_to_json(const std::vector<NonHomogeneityWitness>& witnesses);

FinPoset poset_from_json(const Json& j, const std::string& path = "poset");
Json poset_to_json(const FinPoset& poset);

GeneratedPoset generated_from_json(const Json& j, const std::string& path = "generated");
Json generated_to_json(const GeneratedPoset& g);

Json sweep_report_to_json(const SweepReport& report);
Json monotonicity_report_to_json(const MonotonicityReport& report);
Json char_width_result_to_json(const CharWidthResult& result,
                               const std::vector<std::string>& node_labels);
Json search_result_to_json(const std::optional<CofinalSearchResult>& result,
                           const std::vector<std::string>& node_labels);

// canonical text form: pretty, two-space indent, sorted keys, trailing newline
std::string dump_canonical(const Json& j);

}  // namespace cofinal
