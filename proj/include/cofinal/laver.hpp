#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cofinal/coloring.hpp"
#include "cofinal/finset.hpp"

namespace cofinal {

// Registry driving the adversarial construction: one candidate pair (M,H)
// and one base set a per ordinal surrogate alpha.
struct LaverRegistry {
  Label ground_size = 0;
  std::map<Label, FinSet> a;  // a_alpha inside {0..alpha-1}; absent means empty
  struct MH {
    FinSet M;                 // inside {0..alpha-1}
    std::vector<FinSet> H;    // subsets of M, kept in (size,lex) order
  };
  std::map<Label, MH> mh;

  void validate() const;
};

struct ChoiceRecord {
  Label position = 0;  // alpha_i visited by the walk
  bool success = false;
  FinSet c;
  FinSet d;
};

struct LaverState {
  LaverRegistry registry;
  std::map<Label, FinSet> built;                        // alpha -> s_alpha
  std::map<std::pair<FinSet, FinSet>, Color> constraints;
  std::map<Label, std::vector<ChoiceRecord>> choice_log;
};

// The recursion: for each alpha ascending, walk b_0 = a_alpha cup {alpha}
// downward through the largest elements, choosing two fresh members of
// H_{alpha_i} whenever possible (least two in (size,lex) order) and recording
// F(c_i, s_alpha) = 1, F(d_i, s_alpha) = 2.
LaverState laver_build(const LaverRegistry& registry);

// Constraint-map coloring with a default for unconstrained pairs. Re-checks
// constraint consistency; a conflict signals a build bug.
PairColoring laver_complete(const LaverState& state, Color default_color = 1);

struct NonHomogeneityWitness {
  Label beta = 0;
  FinSet s;  // the built set the pair of constraints point at
  FinSet c;  // color 1
  FinSet d;  // color 2
};

// All re-verified witnesses against the family registered at beta: one per
// built s_alpha containing beta whose choice at beta's position succeeded.
std::vector<NonHomogeneityWitness> laver_verify(const LaverState& state, const PairColoring& F,
                                                Label beta);

}  // namespace cofinal
