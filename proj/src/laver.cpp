#include "cofinal/laver.hpp"

#include <algorithm>

namespace cofinal {

void LaverRegistry::validate() const {
  for (const auto& [alpha, set] : a) {
    if (alpha >= ground_size) fail(Errc::InvalidInput, "a-enumeration index outside the ground");
    if (!set.empty() && set.max() >= alpha) {
      fail(Errc::InvalidInput, "a_" + std::to_string(alpha) + " not inside {0.." +
                                   std::to_string(alpha) + "-1}");
    }
  }
  for (const auto& [alpha, entry] : mh) {
    if (alpha >= ground_size) fail(Errc::InvalidInput, "mh-registry index outside the ground");
    if (!entry.M.empty() && entry.M.max() >= alpha) {
      fail(Errc::InvalidInput, "M_" + std::to_string(alpha) + " not inside {0.." +
                                   std::to_string(alpha) + "-1}");
    }
    for (const FinSet& h : entry.H) {
      if (!h.subset_of(entry.M)) {
        fail(Errc::InvalidInput,
             "H_" + std::to_string(alpha) + " member " + h.to_string() + " not a subset of M");
      }
    }
  }
}

namespace {

const std::vector<FinSet>* family_at(const LaverRegistry& registry, Label alpha) {
  auto it = registry.mh.find(alpha);
  return it == registry.mh.end() ? nullptr : &it->second.H;
}

// least two (size,lex) members of H not used before in this walk
std::optional<std::pair<FinSet, FinSet>> choose_fresh(const std::vector<FinSet>& H,
                                                      const std::vector<FinSet>& used) {
  std::vector<FinSet> sorted = H;
  std::sort(sorted.begin(), sorted.end(), SizeLexLess{});
  std::optional<FinSet> first;
  for (const FinSet& h : sorted) {
    if (std::find(used.begin(), used.end(), h) != used.end()) continue;
    if (!first) {
      first = h;
    } else {
      return std::make_pair(*first, h);
    }
  }
  return std::nullopt;
}

}  // namespace

LaverState laver_build(const LaverRegistry& registry) {
  registry.validate();
  LaverState state;
  state.registry = registry;

  for (Label alpha = 0; alpha < registry.ground_size; ++alpha) {
    FinSet b;
    if (auto it = registry.a.find(alpha); it != registry.a.end()) b = it->second;
    b = b.with(alpha);

    std::vector<ChoiceRecord> walk;
    std::vector<FinSet> used;
    std::optional<Label> position = alpha;
    while (position) {
      ChoiceRecord record;
      record.position = *position;
      if (const std::vector<FinSet>* H = family_at(registry, *position)) {
        if (auto picked = choose_fresh(*H, used)) {
          record.success = true;
          record.c = picked->first;
          record.d = picked->second;
          used.push_back(record.c);
          used.push_back(record.d);
          b = b.unite(record.c).unite(record.d);
        }
      }
      walk.push_back(record);
      // next position: the largest element of b strictly below the current one
      std::optional<Label> next;
      for (Label x : b.labels()) {
        if (x < *position && (!next || x > *next)) next = x;
      }
      position = next;
    }

    if (b.max() != alpha) fail(Errc::VerificationFailure, "built set lost its maximum");
    for (const ChoiceRecord& record : walk) {
      if (!record.success) continue;
      auto put = [&](const FinSet& x, Color color) {
        auto [it, inserted] = state.constraints.insert({{x, b}, color});
        if (!inserted && it->second != color) {
          fail(Errc::ConflictingConstraint,
               "pair (" + x.to_string() + "," + b.to_string() + ") constrained twice");
        }
      };
      put(record.c, 1);
      put(record.d, 2);
    }
    state.built[alpha] = b;
    state.choice_log[alpha] = std::move(walk);
  }
  return state;
}

PairColoring laver_complete(const LaverState& state, Color default_color) {
  // consistency re-check: one color per pair across the whole build
  std::map<std::pair<FinSet, FinSet>, Color> seen;
  for (const auto& [alpha, walk] : state.choice_log) {
    auto built = state.built.find(alpha);
    if (built == state.built.end()) fail(Errc::VerificationFailure, "missing built set");
    for (const ChoiceRecord& record : walk) {
      if (!record.success) continue;
      for (auto [x, color] : {std::pair{record.c, 1}, std::pair{record.d, 2}}) {
        auto [it, inserted] = seen.insert({{x, built->second}, color});
        if (!inserted && it->second != color) {
          fail(Errc::ConflictingConstraint, "conflicting constraints on one pair");
        }
      }
    }
  }
  if (seen != state.constraints) {
    fail(Errc::ConflictingConstraint, "constraint map does not match the choice log");
  }
  return PairColoring::from_constraints(2, state.constraints, default_color);
}

std::vector<NonHomogeneityWitness> laver_verify(const LaverState& state, const PairColoring& F,
                                                Label beta) {
  auto entry = state.registry.mh.find(beta);
  if (entry == state.registry.mh.end()) {
    fail(Errc::InvalidInput, "beta " + std::to_string(beta) + " not registered");
  }
  const std::vector<FinSet>& H_beta = entry->second.H;

  std::vector<NonHomogeneityWitness> witnesses;
  for (const auto& [alpha, s] : state.built) {
    if (!s.contains(beta)) continue;
    const auto& walk = state.choice_log.at(alpha);
    for (const ChoiceRecord& record : walk) {
      if (record.position != beta || !record.success) continue;
      NonHomogeneityWitness w{beta, s, record.c, record.d};
      bool in_family =
          std::find(H_beta.begin(), H_beta.end(), w.c) != H_beta.end() &&
          std::find(H_beta.begin(), H_beta.end(), w.d) != H_beta.end();
      if (!in_family || !w.c.proper_subset_of(s) || !w.d.proper_subset_of(s) ||
          F.eval(w.c, s) != 1 || F.eval(w.d, s) != 2) {
        fail(Errc::VerificationFailure, "recorded witness does not re-verify");
      }
      witnesses.push_back(std::move(w));
    }
  }
  return witnesses;
}

}  // namespace cofinal
