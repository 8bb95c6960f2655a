#include "cofinal/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace cofinal {

Chain::Chain(std::vector<FinSet> sets) : sets_(std::move(sets)) {
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (!sets_[i - 1].proper_subset_of(sets_[i])) {
      fail(Errc::InvalidInput, "chain not strictly increasing at position " + std::to_string(i));
    }
  }
}

Chain Chain::prefix_chain(const std::function<Label(std::size_t)>& stream, std::size_t n) {
  std::vector<FinSet> sets;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(stream(i));
    sets.push_back(FinSet::canonicalize(labels));
    if (sets.back().size() != i + 1) fail(Errc::InvalidInput, "ground stream repeats a label");
  }
  return Chain(std::move(sets));
}

std::vector<std::pair<std::size_t, std::size_t>> EndHomogeneousCertificate::verify(
    const PairColoring& F) const {
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  for (std::size_t i = 0; i + 1 < subsequence.size(); ++i) {
    for (std::size_t j = i + 1; j < subsequence.size(); ++j) {
      if (F.eval(subsequence[i], subsequence[j]) != end_colors[i]) violations.emplace_back(i, j);
    }
  }
  return violations;
}

std::vector<std::pair<std::size_t, std::size_t>> HomogeneousCertificate::verify(
    const PairColoring& F) const {
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && members[i].proper_subset_of(members[j]) &&
          F.eval(members[i], members[j]) != color) {
        violations.emplace_back(i, j);
      }
    }
  }
  return violations;
}

EndHomogeneousCertificate extract_end_homogeneous(const PairColoring& F, const Chain& chain) {
  EndHomogeneousCertificate cert;
  std::vector<FinSet> remaining = chain.sets();
  std::vector<FinSet> out;
  std::vector<Color> colors;
  while (!remaining.empty()) {
    FinSet head = remaining.front();
    out.push_back(head);
    if (remaining.size() == 1) break;
    std::map<Color, std::vector<FinSet>> classes;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      classes[F.eval(head, remaining[i])].push_back(remaining[i]);
    }
    // largest class, ties toward the smallest color index
    Color best = 0;
    std::size_t best_size = 0;
    for (const auto& [c, members] : classes) {
      if (members.size() > best_size) {
        best = c;
        best_size = members.size();
      }
    }
    colors.push_back(best);
    remaining = classes[best];
  }
  cert.subsequence = Chain(std::move(out));
  cert.end_colors = std::move(colors);
  return cert;
}

HomogeneousCertificate extract_homogeneous(const PairColoring& F,
                                           const EndHomogeneousCertificate& eh) {
  const std::size_t len = eh.subsequence.size();
  if ((len == 0 && !eh.end_colors.empty()) || (len > 0 && eh.end_colors.size() != len - 1)) {
    fail(Errc::VerificationFailure, "certificate end-color count does not match its chain");
  }
  if (!eh.verify(F).empty()) {
    fail(Errc::VerificationFailure, "end-homogeneous certificate does not re-verify");
  }
  HomogeneousCertificate cert;
  if (eh.subsequence.size() == 0) return cert;

  std::map<Color, std::size_t> counts;
  for (Color c : eh.end_colors) ++counts[c];
  Color best = 1;
  std::size_t best_count = 0;
  for (const auto& [c, n] : counts) {
    if (n > best_count) {
      best = c;
      best_count = n;
    }
  }
  cert.color = best;
  for (std::size_t i = 0; i < eh.end_colors.size(); ++i) {
    if (eh.end_colors[i] == best) cert.members.push_back(eh.subsequence[i]);
  }
  // the final element lies in every end-color class vacuously
  cert.members.push_back(eh.subsequence[eh.subsequence.size() - 1]);

  for (std::size_t i = 0; i < cert.members.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.members.size(); ++j) {
      ++cert.checked_pairs;
      if (F.eval(cert.members[i], cert.members[j]) != best) {
        fail(Errc::VerificationFailure, "extracted set fails pairwise color verification");
      }
    }
  }
  return cert;
}

namespace {

// largest m with {stream(0..m-1)} inside some member
std::size_t coverage_bound(const std::vector<FinSet>& members,
                           const std::function<Label(std::size_t)>& stream, std::size_t n) {
  std::size_t best = 0;
  std::vector<Label> prefix;
  for (std::size_t m = 1; m <= n; ++m) {
    prefix.push_back(stream(m - 1));
    FinSet p = FinSet::canonicalize(prefix);
    bool covered = false;
    for (const FinSet& h : members) {
      if (p.subset_of(h)) {
        covered = true;
        break;
      }
    }
    if (!covered) break;
    best = m;
  }
  return best;
}

}  // namespace

CofinalHomogeneous countable_cofinal_homogeneous(
    const PairColoring& F, const std::function<Label(std::size_t)>& stream, std::size_t steps) {
  if (steps < 1) fail(Errc::InvalidInput, "need at least one step");
  CofinalHomogeneous out;
  out.chain = Chain::prefix_chain(stream, steps);
  out.certificate = extract_homogeneous(F, extract_end_homogeneous(F, out.chain));
  out.coverage = coverage_bound(out.certificate.members, stream, steps);
  return out;
}

CofinalHomogeneous countable_cofinal_homogeneous(const PairColoring& F, std::size_t steps) {
  return countable_cofinal_homogeneous(
      F, [](std::size_t i) { return static_cast<Label>(i); }, steps);
}

BruteHomogeneous brute_max_homogeneous(const PairColoring& F, const Chain& chain) {
  const std::size_t n = chain.size();
  if (n > 20) fail(Errc::SizeLimit, "brute-force oracle limited to chains of length 20");
  BruteHomogeneous best;
  if (n == 0) return best;

  // color[i][j] for i < j, precomputed once
  std::vector<std::vector<Color>> color(n, std::vector<Color>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) color[i][j] = F.eval(chain[i], chain[j]);
  }

  for (Color c = 1; c <= F.k(); ++c) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size <= best.size) continue;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = i + 1; j < n && ok; ++j) {
          if ((mask >> j & 1) && color[i][j] != c) ok = false;
        }
      }
      if (!ok) continue;
      best.size = size;
      best.color = c;
      best.witness.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) best.witness.push_back(chain[i]);
      }
    }
  }
  return best;
}

}  // namespace cofinal
