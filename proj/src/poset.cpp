#include "cofinal/poset.hpp"

#include <algorithm>
#include <queue>

namespace cofinal {

namespace {
constexpr std::size_t kMaxPosetSize = std::size_t{1} << 14;
}

FinPoset::FinPoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   std::vector<std::string> node_labels)
    : n_(n), words_((n + 63) / 64), labels_(std::move(node_labels)), generators_(edges) {
  if (n > kMaxPosetSize) fail(Errc::SizeLimit, "poset too large");
  if (!labels_.empty() && labels_.size() != n) {
    fail(Errc::InvalidInput, "node label count does not match element count");
  }
  up_.assign(n_ * words_, 0);

  std::vector<std::vector<std::size_t>> succ(n_);
  std::vector<std::size_t> indeg(n_, 0);
  for (auto [i, j] : edges) {
    if (i >= n_ || j >= n_) fail(Errc::InvalidInput, "lt edge references unknown element");
    if (i == j) fail(Errc::InvalidInput, "lt edge is reflexive");
    succ[i].push_back(j);
    ++indeg[j];
  }

  // Kahn order; closure by OR-ing successor rows in reverse topological order.
  std::vector<std::size_t> order;
  order.reserve(n_);
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < n_; ++i) {
    if (indeg[i] == 0) q.push(i);
  }
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    order.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indeg[j] == 0) q.push(j);
    }
  }
  if (order.size() != n_) fail(Errc::InvalidInput, "lt relation contains a cycle");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t i = *it;
    for (std::size_t j : succ[i]) {
      row(i)[word(j)] |= std::uint64_t{1} << bit(j);
      for (std::size_t w = 0; w < words_; ++w) row(i)[w] |= row(j)[w];
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (less(i, i)) fail(Errc::InvalidInput, "lt relation contains a cycle");
  }
}

bool FinPoset::directed() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      bool bounded = false;
      for (std::size_t u = 0; u < n_ && !bounded; ++u) {
        bool above_i = u == i || less(i, u);
        bool above_j = u == j || less(j, u);
        bounded = above_i && above_j;
      }
      if (!bounded) return false;
    }
  }
  return true;
}

std::vector<std::size_t> FinPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    bool any_above = false;
    for (std::size_t w = 0; w < words_ && !any_above; ++w) any_above = row(i)[w] != 0;
    if (!any_above) out.push_back(i);
  }
  return out;
}

std::size_t FinPoset::predecessor_count(std::size_t i) const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    if (less(k, i)) ++count;
  }
  return count;
}

}  // namespace cofinal
