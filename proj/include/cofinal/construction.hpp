#pragma once

#include <optional>
#include <vector>

#include "cofinal/goodness.hpp"
#include "cofinal/ramsey.hpp"

namespace cofinal {

struct LemmaWitness {
  TotalColoring g;
  FinSet c;
  FinSet C;
  std::uint64_t quantified_pairs = 0;  // size of the goodness scan that accepted (c,C)
};

// Sound search for a good extension pair: a total coloring g of q.part and
// a pair (c,C) >= q with c a proper ground-extension of q.part, c g-correct
// and (c,C) good for g inside the window. Candidates are scanned in (size,lex)
// order and g is derived from the candidate itself (g(x) = F(x,c)), so every
// returned witness verifies by construction; no completeness is claimed.
std::optional<LemmaWitness> lemma22_search(const PairColoring& F, const AnchoredPair& q,
                                           const Window& win, const GoodnessLimits& limits = {});

// Constrained variant: g must extend f, equivalently the candidate c must
// be f-correct. Requires pair_le(p, q) and p good for f (checked; InvalidInput
// otherwise).
std::optional<LemmaWitness> lemma23_search(const PairColoring& F, const AnchoredPair& p,
                                           const PartialColoring& f, const AnchoredPair& q,
                                           const Window& win, const GoodnessLimits& limits = {});

struct ApproximationStep {
  FinSet b;
  TotalColoring g;
  FinSet c;
  FinSet C;
};

// A built approximation: the ground prefix, the two interleaved families,
// and the step log that produced them.
struct Approximation {
  FinSet ground_prefix;
  std::vector<FinSet> G;
  std::vector<FinSet> H;
  Color green = 1;  // extraction color of the original build
  std::vector<ApproximationStep> log;
};

class StuckError : public Error {
public:
  StuckError(const std::string& what, std::vector<ApproximationStep> partial)
      : Error(Errc::ConstructionStuck, what), partial_log(std::move(partial)) {}
  std::vector<ApproximationStep> partial_log;
};

// Iterate the extension search from b0 = {least label}, absorbing the first
// i elements of every earlier ground into b_{i+1}, then Ramsey-extract the
// chain {c_i} and alternate the result into G (even positions) and H (odd
// positions).
Approximation build_approximation(const PairColoring& F, const Window& win, std::size_t depth,
                                  const GoodnessLimits& limits = {});

// Extend a verified approximation past a fresh label xi, using the goodness
// of (a_n, A) for f^H_{a_n} along the sorted members of G. Runs min(depth, |G|) steps.
Approximation extend_approximation(const PairColoring& F, const Approximation& approx, Label xi,
                                   const Window& win, std::size_t depth,
                                   const GoodnessLimits& limits = {});

struct ClauseReport {
  bool pass = false;
  std::string detail;
};

struct ApproximationReport {
  ClauseReport disjoint;         // G, H disjoint and inside the ground prefix
  ClauseReport dominance;        // both families cover a nonempty ground prefix
  ClauseReport end_homogeneous;  // H end-homogeneous, exhaustive pair scan
  ClauseReport goodness;         // every a in G good for f^H_a
  std::size_t coverage_G = 0;
  std::size_t coverage_H = 0;

  bool all() const {
    return disjoint.pass && dominance.pass && end_homogeneous.pass && goodness.pass;
  }
};

// Checks the four approximation clauses; failures are report content, not
// errors (resource caps still throw).
ApproximationReport verify_approximation(const PairColoring& F, const Approximation& approx,
                                         const Window& win, const GoodnessLimits& limits = {});

// Largest m such that every subset of the first m elements of `ground` is
// dominated by a member (equivalently: the first m elements lie inside one).
std::size_t dominance_prefix(const std::vector<FinSet>& members, const FinSet& ground);

}  // namespace cofinal
