#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cofinal/error.hpp"

namespace cofinal {

// Finite strict poset over opaque node ids 0..n-1. The relation is stored
// transitively closed at construction so comparability queries are O(1)
// bitset probes. Construction rejects cycles (closure would break
// irreflexivity).
class FinPoset {
public:
  FinPoset() = default;

  // edges are a generating set of the strict order; the closure is computed.
  FinPoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           std::vector<std::string> node_labels = {});

  std::size_t size() const noexcept { return n_; }
  bool less(std::size_t i, std::size_t j) const { return row(i)[word(j)] >> bit(j) & 1; }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

  // Every two elements have a common upper bound.
  bool directed() const;

  std::vector<std::size_t> maximal_elements() const;

  // Number of k with k < i.
  std::size_t predecessor_count(std::size_t i) const;

  // strict-successor bitset row of node i, 64 nodes per word
  const std::uint64_t* up_row(std::size_t i) const { return row(i); }
  std::size_t words() const noexcept { return words_; }

  const std::vector<std::string>& node_labels() const noexcept { return labels_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& generators() const noexcept {
    return generators_;
  }

private:
  const std::uint64_t* row(std::size_t i) const { return up_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return up_.data() + i * words_; }
  static std::size_t word(std::size_t j) { return j >> 6; }
  static std::size_t bit(std::size_t j) { return j & 63; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;  // up_[i*words_+w]: bit j set iff i < j
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> generators_;
};

}  // namespace cofinal
