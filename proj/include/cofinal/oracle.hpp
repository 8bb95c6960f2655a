#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cofinal/coloring.hpp"
#include "cofinal/goodness.hpp"
#include "cofinal/poset.hpp"

namespace cofinal {

// Fully specified PRNG so sampled reports are reproducible from the recorded
// 64-bit seed alone.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
inline constexpr const char* kPrngName = "splitmix64";

// ---------------------------------------------------------------------------
// cofinal homogeneous search on small posets

struct CofinalSearchResult {
  std::vector<std::size_t> H;
  Color color = 1;
  std::size_t chain_length = 0;
};

// First (color, subset-mask) pair, colors ascending and masks in numeric
// order, such that H dominates the interior, every comparable pair inside H
// has the color, and H contains a chain of length >= min_chain.
std::optional<CofinalSearchResult> search_cofinal_homogeneous(
    const FinPoset& S, int k, const std::function<Color(std::size_t, std::size_t)>& F,
    const std::vector<std::size_t>& interior, std::size_t min_chain);

// ---------------------------------------------------------------------------
// sweeps over every coloring of a subset-lattice window

struct SweepOptions {
  int window = 2;
  int k = 2;
  bool exhaustive = true;
  std::uint64_t seed = 0;     // sampled mode
  std::size_t samples = 0;    // sampled mode
  std::size_t min_chain = 1;
  std::optional<std::vector<std::size_t>> interior;  // node ids; all when absent
  std::size_t jobs = 1;
};

struct SweepReport {
  SweepOptions options;
  std::uint64_t coloring_count = 0;
  std::uint64_t found = 0;
  std::uint64_t none = 0;
  std::map<Color, std::uint64_t> found_by_color;
  std::map<std::size_t, std::uint64_t> h_size_histogram;
};

SweepReport sweep_colorings(const SweepOptions& options);

// ---------------------------------------------------------------------------
// goodness-monotonicity sweep (the Remark after the goodness definition)

struct MonotonicityOptions {
  int window = 3;
  int k = 2;
  int reserve = 1;
  std::size_t jobs = 1;
  std::uint64_t coloring_cap = std::uint64_t{1} << 20;  // exhaustive guard
};

struct MonotonicityReport {
  std::uint64_t colorings = 0;
  std::uint64_t combos_per_coloring = 0;  // (p,f) pairs whose verdict is scanned
  std::uint64_t violations = 0;
  std::string first_violation;  // empty when none
};

// For every table coloring of the window and every anchored pair p with a
// partial coloring f of its part: good(p,f), f' submap of f, p' >= p imply
// good(p',f'). Checked through the generating relations (drop one key;
// one-step ground/part growth), which span every such quadruple.
MonotonicityReport remark_monotonicity_sweep(const MonotonicityOptions& options);

// ---------------------------------------------------------------------------
// finite-character diagnostics

struct GeneratedPoset {
  enum class Kind { SubsetLattice, OrdinalSum, Product };
  Kind kind = Kind::SubsetLattice;
  int depth = 1;
  std::vector<GeneratedPoset> factors;  // Product: exactly two

  static const char* kind_name(Kind k);
};

// Materialized level-`depth` prefix of a generated infinite poset. Frontier
// elements of a prefix are not maximal in the generated object, which is what
// the char-width greedy keys off.
struct GeneratedPrefix {
  std::vector<std::string> node_labels;
  std::function<bool(std::size_t, std::size_t)> less;
  std::vector<bool> maximal_in_limit;
  std::size_t size() const { return node_labels.size(); }
};

GeneratedPrefix materialize(const GeneratedPoset& spec);

struct CharWidthResult {
  std::vector<std::size_t> s_prime;
  std::size_t max_preds = 0;
  bool pass = false;
  bool exact = false;
};

// Greedy: seed with the maximal elements (of the finite poset, or of the
// generated limit object), then add every element not yet dominated, in
// enumeration order. Exact mode (size <= 16) searches all cofinal subsets for
// the least possible max-predecessor count.
CharWidthResult char_width(const FinPoset& S, std::size_t bound, bool exact = false);
CharWidthResult char_width(const GeneratedPrefix& S, std::size_t bound, bool exact = false);

}  // namespace cofinal
