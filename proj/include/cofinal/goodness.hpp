#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cofinal/coloring.hpp"
#include "cofinal/finset.hpp"

namespace cofinal {

// Finite surrogate for "a countable set with room around it": quantifiers
// over grounds B range inside {0..width-1} and must leave at least `reserve`
// labels unclaimed.
struct Window {
  int width = 1;
  int reserve = 1;

  Window() = default;
  Window(int w, int r) : width(w), reserve(r) {
    if (w < 1 || w > 62 || r < 1 || r >= w) fail(Errc::InvalidInput, "bad window parameters");
  }

  std::uint64_t mask() const { return (std::uint64_t{1} << width) - 1; }
};

struct GoodnessLimits {
  std::uint64_t pair_cap = 1'000'000;  // quantified (b,B) pairs per scan
  std::size_t part_cap = 4;            // lemma-search part size
  std::size_t candidate_cap = 1024;    // lemma-search candidates examined
  bool retain_witnesses = false;
};

struct GoodnessVerdict {
  bool good = false;
  std::uint64_t quantified_pairs = 0;
  std::optional<AnchoredPair> counterexample;
  // witness extension per quantified pair, retained on request only
  std::vector<std::pair<AnchoredPair, FinSet>> extension_map;
};

namespace detail {

struct MaskAssignment {
  std::uint64_t x = 0;
  Color color = 1;
};

struct ScanScratch {
  std::vector<std::int8_t> correct;
  std::vector<int> free_bits;
  std::vector<int> comb;
  std::vector<int> rest;
  std::vector<int> inner;
};

struct ScanResult {
  bool good = true;
  std::uint64_t pairs = 0;
  std::uint64_t cex_t = 0;  // relative masks over the free positions
  std::uint64_t cex_r = 0;
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>> witnesses;
};

inline std::uint64_t saturating_pair_count(int room, int reserve) {
  if (room < reserve) return 0;
  long double approx = 1.0L;
  for (int i = 0; i < reserve; ++i) approx = approx * (room - i) / (i + 1);
  for (int i = 0; i < room - reserve; ++i) {
    approx *= 2.0L;
    if (approx > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(approx + 0.5L);
}

// Visits (size,lex)-ordered index combinations of {0..n-1} of every size
// (smallest size first). Returns false from the visitor to stop.
template <class Fn>
bool for_each_combination(int n, int size, std::vector<int>& idx, Fn&& fn) {
  idx.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(std::span<const int>(idx.data(), static_cast<std::size_t>(size)))) return false;
    int i = size;
    while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - size + i - 1) --i;
    if (i == 0) return true;
    ++idx[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < size; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Core bounded-goodness scan over masks. `part` is the pair's finite part,
// `free_mask` the window labels outside its ground. Quantification runs over
// the maximal grounds only (exactly `reserve` labels left free), which gives
// the same verdict as quantifying every ground: any admissible (b,B) embeds
// in a maximal (b,B') whose witness extensions are also B-disjoint.
template <class EvalFn>
ScanResult goodness_scan_masks(EvalFn&& eval, std::uint64_t part, std::uint64_t free_mask,
                               int reserve, std::span<const MaskAssignment> f,
                               std::uint64_t pair_cap, bool retain, ScanScratch& scratch) {
  ScanResult result;
  auto& free_bits = scratch.free_bits;
  free_bits.clear();
  for (std::uint64_t m = free_mask; m; m &= m - 1) free_bits.push_back(std::countr_zero(m));
  const int room = static_cast<int>(free_bits.size());

  result.pairs = saturating_pair_count(room, reserve);
  if (result.pairs > pair_cap) fail(Errc::CapExceeded, "goodness search space exceeds pair cap");
  if (room > 26) fail(Errc::CapExceeded, "free tail too wide for the correctness memo");
  if (result.pairs == 0) return result;  // no admissible ground: vacuously good

  auto expand = [&](std::uint64_t rel) {
    std::uint64_t abs = 0;
    while (rel) {
      int i = std::countr_zero(rel);
      rel &= rel - 1;
      abs |= std::uint64_t{1} << free_bits[static_cast<std::size_t>(i)];
    }
    return abs;
  };

  auto& correct = scratch.correct;
  correct.assign(std::size_t{1} << room, -1);
  auto is_correct = [&](std::uint64_t rel) {
    std::int8_t& memo = correct[rel];
    if (memo < 0) {
      std::uint64_t c = part | expand(rel);
      memo = 1;
      for (const MaskAssignment& a : f) {
        if (eval(a.x, c) != a.color) {
          memo = 0;
          break;
        }
      }
    }
    return memo == 1;
  };

  for (int t_size = 0; t_size <= room - reserve; ++t_size) {
    bool keep_going = for_each_combination(room, t_size, scratch.comb, [&](std::span<const int> t_idx) {
      std::uint64_t t_rel = 0;
      for (int i : t_idx) t_rel |= std::uint64_t{1} << i;
      auto& rest = scratch.rest;
      rest.clear();
      for (int i = 0; i < room; ++i) {
        if (!(t_rel >> i & 1)) rest.push_back(i);
      }
      return for_each_combination(
          static_cast<int>(rest.size()), reserve, scratch.inner,
          [&](std::span<const int> r_idx) {
            std::uint64_t r_rel = 0;
            for (int i : r_idx) r_rel |= std::uint64_t{1} << rest[static_cast<std::size_t>(i)];
            // candidates c = b cup s for nonempty s inside the free residue
            std::uint64_t found = 0;
            bool satisfied = false;
            for_each_submask_size_lex(r_rel, [&](std::uint64_t s) {
              if (s == 0) return true;
              if (is_correct(t_rel | s)) {
                satisfied = true;
                found = s;
                return false;
              }
              return true;
            });
            if (!satisfied) {
              result.good = false;
              result.cex_t = t_rel;
              result.cex_r = r_rel;
              return false;
            }
            if (retain) result.witnesses.push_back({{t_rel, r_rel}, found});
            return true;
          });
    });
    if (!keep_going) break;
  }
  return result;
}

}  // namespace detail

// Bounded goodness: every (b,B) >= p with b inside B,
// B inside the window, and at least `reserve` window labels outside B admits
// a proper B-extension of b that is f-correct.
// Requires p.ground inside {0..width-1} and f.base inside p.part.
GoodnessVerdict is_good_bounded(const PairColoring& F, const AnchoredPair& p,
                                const PartialColoring& f, const Window& win,
                                const GoodnessLimits& limits = {});

// Exhaustive candidate re-scan of a claimed counterexample; true when the
// counterexample is genuine (no f-correct proper B-extension exists).
bool reverify_counterexample(const PairColoring& F, const PartialColoring& f,
                             const AnchoredPair& cex, const Window& win);

}  // namespace cofinal
