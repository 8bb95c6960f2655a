#include "cofinal/finset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cofinal {

FinSet::FinSet(std::initializer_list<Label> labels) {
  *this = canonicalize(std::vector<Label>(labels));
}

FinSet FinSet::canonicalize(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  FinSet s;
  s.labels_ = std::move(labels);
  return s;
}

FinSet FinSet::from_sorted(std::vector<Label> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] >= labels[i]) {
      fail(Errc::InvalidInput, "set not in strictly ascending order");
    }
  }
  FinSet s;
  s.labels_ = std::move(labels);
  return s;
}

FinSet FinSet::from_mask(std::uint64_t mask) {
  FinSet s;
  while (mask) {
    s.labels_.push_back(static_cast<Label>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool FinSet::contains(Label x) const {
  return std::binary_search(labels_.begin(), labels_.end(), x);
}

Label FinSet::max() const {
  if (labels_.empty()) fail(Errc::InvalidInput, "max of empty set");
  return labels_.back();
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                       labels_.end());
}

bool FinSet::proper_subset_of(const FinSet& other) const {
  return labels_.size() < other.labels_.size() && subset_of(other);
}

FinSet FinSet::unite(const FinSet& other) const {
  FinSet out;
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out.labels_));
  return out;
}

FinSet FinSet::intersect(const FinSet& other) const {
  FinSet out;
  std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(out.labels_));
  return out;
}

FinSet FinSet::minus(const FinSet& other) const {
  FinSet out;
  std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                      other.labels_.end(), std::back_inserter(out.labels_));
  return out;
}

FinSet FinSet::with(Label x) const {
  FinSet one;
  one.labels_.push_back(x);
  return unite(one);
}

std::uint64_t FinSet::to_mask() const {
  std::uint64_t mask = 0;
  for (Label x : labels_) {
    if (x >= 64) fail(Errc::InvalidInput, "label " + std::to_string(x) + " too large for mask");
    mask |= std::uint64_t{1} << x;
  }
  return mask;
}

std::string FinSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) os << ',';
    os << labels_[i];
  }
  os << '}';
  return os.str();
}

bool size_lex_less(const FinSet& a, const FinSet& b) { return a < b; }

bool is_proper_subset(const FinSet& x, const FinSet& y) { return x.proper_subset_of(y); }

bool is_a_extension(const FinSet& a, const FinSet& A, const FinSet& b, bool proper) {
  if (!a.subset_of(A)) fail(Errc::InvalidInput, "a is not a subset of A");
  if (!a.subset_of(b)) return false;
  if (!(b.intersect(A) == a)) return false;
  return !proper || a.size() < b.size();
}

AnchoredPair::AnchoredPair(FinSet part_, FinSet ground_)
    : part(std::move(part_)), ground(std::move(ground_)) {
  if (!part.subset_of(ground)) fail(Errc::InvalidInput, "pair part not a subset of its ground");
}

bool pair_le(const AnchoredPair& p, const AnchoredPair& q) {
  return p.ground.subset_of(q.ground) && is_a_extension(p.part, p.ground, q.part);
}

CofinalityReport dominates(const std::vector<FinSet>& H, const std::vector<FinSet>& targets) {
  CofinalityReport report;
  report.cofinal = true;
  for (const FinSet& x : targets) {
    const FinSet* witness = nullptr;
    for (const FinSet& y : H) {
      if (x.subset_of(y)) {
        witness = &y;
        break;
      }
    }
    if (!witness) {
      report.cofinal = false;
      report.witness_map.clear();
      report.counterexample = x;
      return report;
    }
    report.witness_map.emplace_back(x, *witness);
  }
  return report;
}

void for_each_subset_size_lex(std::span<const Label> elems,
                              const std::function<bool(const FinSet&)>& visit) {
  const std::size_t n = elems.size();
  std::vector<std::size_t> idx;
  std::vector<Label> buf;
  for (std::size_t s = 0; s <= n; ++s) {
    // combinations of size s in lex order over index sequences
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      buf.clear();
      for (std::size_t i : idx) buf.push_back(elems[i]);
      if (!visit(FinSet::from_sorted(buf))) return;
      if (s == 0) break;
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

void for_each_submask_size_lex(std::uint64_t mask,
                               const std::function<bool(std::uint64_t)>& visit) {
  std::vector<Label> elems;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    elems.push_back(static_cast<Label>(std::countr_zero(m)));
  }
  const std::size_t n = elems.size();
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s <= n; ++s) {
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::uint64_t sub = 0;
      for (std::size_t i : idx) sub |= std::uint64_t{1} << elems[i];
      if (!visit(sub)) return;
      if (s == 0) break;
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace cofinal
