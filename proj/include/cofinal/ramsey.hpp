#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cofinal/coloring.hpp"
#include "cofinal/finset.hpp"

namespace cofinal {

// Strictly increasing chain of finite sets under proper inclusion.
class Chain {
public:
  Chain() = default;
  explicit Chain(std::vector<FinSet> sets);

  const std::vector<FinSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const FinSet& operator[](std::size_t i) const { return sets_[i]; }

  // c_i = {first i+1 labels of the stream}, i < n.
  static Chain prefix_chain(const std::function<Label(std::size_t)>& stream, std::size_t n);

private:
  std::vector<FinSet> sets_;
};

struct EndHomogeneousCertificate {
  Chain subsequence;
  std::vector<Color> end_colors;  // one per non-final member

  // violating (i,j) pairs with eval(s_i,s_j) != end_colors[i]; empty on success
  std::vector<std::pair<std::size_t, std::size_t>> verify(const PairColoring& F) const;
};

struct HomogeneousCertificate {
  std::vector<FinSet> members;  // in chain order
  Color color = 1;
  std::uint64_t checked_pairs = 0;

  std::vector<std::pair<std::size_t, std::size_t>> verify(const PairColoring& F) const;
};

// Greedy end-homogeneous extraction: take the first remaining element,
// split the rest by its outgoing color, recurse into the largest class
// (ties toward the smallest color index). Output length is at least
// floor(log_k(N(k-1)+1)) for input length N.
EndHomogeneousCertificate extract_end_homogeneous(const PairColoring& F, const Chain& chain);

// Refine an end-homogeneous subsequence to a homogeneous set: the most
// frequent end color (ties toward the smallest index), its members plus the
// final element. Throws VerificationFailure on a corrupt input certificate.
HomogeneousCertificate extract_homogeneous(const PairColoring& F,
                                           const EndHomogeneousCertificate& eh);

struct CofinalHomogeneous {
  HomogeneousCertificate certificate;
  Chain chain;
  // largest m with every subset of the first m stream labels dominated by a member
  std::size_t coverage = 0;
};

// The countable-case construction on a lazily enumerated ground set: build
// the prefix chain, extract, and report the dominance bound.
CofinalHomogeneous countable_cofinal_homogeneous(const PairColoring& F,
                                                 const std::function<Label(std::size_t)>& stream,
                                                 std::size_t steps);
CofinalHomogeneous countable_cofinal_homogeneous(const PairColoring& F, std::size_t steps);

struct BruteHomogeneous {
  std::size_t size = 0;
  std::vector<FinSet> witness;
  Color color = 1;
};

// Exhaustive oracle: largest subset of the chain homogeneous in one color,
// scanning colors ascending and subsets in mask order (strictly larger sizes
// replace earlier finds). Chains longer than 20 raise SizeLimit.
BruteHomogeneous brute_max_homogeneous(const PairColoring& F, const Chain& chain);

}  // namespace cofinal
