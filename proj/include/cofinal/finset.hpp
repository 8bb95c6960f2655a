#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cofinal/error.hpp"

namespace cofinal {

// Ground-set elements are plain labels. Windowed operations restrict them to
// {0..w-1} and work on bitmasks; FinSet itself imposes no upper bound.
using Label = std::uint32_t;

// Canonical finite set of labels: strictly ascending, no duplicates.
class FinSet {
public:
  FinSet() = default;
  FinSet(std::initializer_list<Label> labels);

  // Sorts and deduplicates.
  static FinSet canonicalize(std::vector<Label> labels);

  // Requires the input to already be strictly ascending; throws InvalidInput
  // otherwise. Used by parsers, where non-canonical input is an error.
  static FinSet from_sorted(std::vector<Label> labels);

  static FinSet from_mask(std::uint64_t mask);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  bool contains(Label x) const;
  Label max() const;  // throws InvalidInput on empty

  bool subset_of(const FinSet& other) const;
  bool proper_subset_of(const FinSet& other) const;

  FinSet unite(const FinSet& other) const;
  FinSet intersect(const FinSet& other) const;
  FinSet minus(const FinSet& other) const;
  FinSet with(Label x) const;

  // All labels must be < 64; throws InvalidInput otherwise.
  std::uint64_t to_mask() const;

  bool operator==(const FinSet&) const = default;

  // (size, lex) — the canonical enumeration order of the project
  bool operator<(const FinSet& o) const {
    if (labels_.size() != o.labels_.size()) return labels_.size() < o.labels_.size();
    return labels_ < o.labels_;
  }

  std::string to_string() const;

private:
  std::vector<Label> labels_;
};

// The enumeration order used throughout: cardinality first, then
// lexicographic on the sorted element sequences.
bool size_lex_less(const FinSet& a, const FinSet& b);

struct SizeLexLess {
  bool operator()(const FinSet& a, const FinSet& b) const { return size_lex_less(a, b); }
};

// x is a proper subset of y.
bool is_proper_subset(const FinSet& x, const FinSet& y);

// b is an A-extension of a: a <= b and b cap A = a. With proper set,
// additionally a != b. Requires a subset of A.
bool is_a_extension(const FinSet& a, const FinSet& A, const FinSet& b, bool proper = false);

// The pair (part, ground) with part a subset of ground.
struct AnchoredPair {
  FinSet part;
  FinSet ground;

  AnchoredPair() = default;
  AnchoredPair(FinSet part_, FinSet ground_);

  bool operator==(const AnchoredPair&) const = default;
};

// (a,A) <= (b,B): A subset of B and b an A-extension of a.
bool pair_le(const AnchoredPair& p, const AnchoredPair& q);

struct CofinalityReport {
  bool cofinal = false;
  // target -> witness, populated when cofinal
  std::vector<std::pair<FinSet, FinSet>> witness_map;
  // an undominated target, populated when not cofinal
  std::optional<FinSet> counterexample;
};

// Does every target have a superset in H? Vacuously cofinal on empty targets.
CofinalityReport dominates(const std::vector<FinSet>& H, const std::vector<FinSet>& targets);

// Visits every subset of `elems` in (size, lex) order. elems must be the
// ascending label list of a FinSet.
void for_each_subset_size_lex(std::span<const Label> elems,
                              const std::function<bool(const FinSet&)>& visit);

// Mask variant: visits submasks of `mask` in (popcount, lex-on-bit-positions)
// order. Returns false from `visit` to stop early.
void for_each_submask_size_lex(std::uint64_t mask, const std::function<bool(std::uint64_t)>& visit);

}  // namespace cofinal
