#include "cofinal/goodness.hpp"

namespace cofinal {

GoodnessVerdict is_good_bounded(const PairColoring& F, const AnchoredPair& p,
                                const PartialColoring& f, const Window& win,
                                const GoodnessLimits& limits) {
  if (!p.ground.empty() && p.ground.max() >= static_cast<Label>(win.width)) {
    fail(Errc::InvalidInput, "pair ground extends outside the window");
  }
  if (!f.base().subset_of(p.part)) {
    fail(Errc::InvalidInput, "partial coloring base not inside the pair's part");
  }

  const std::uint64_t part = p.part.to_mask();
  const std::uint64_t ground = p.ground.to_mask();
  const std::uint64_t free_mask = win.mask() & ~ground;

  std::vector<detail::MaskAssignment> assignments;
  for (const auto& [x, color] : f.items()) assignments.push_back({x.to_mask(), color});

  detail::ScanScratch scratch;
  auto result = detail::goodness_scan_masks([&F](std::uint64_t x, std::uint64_t y) { return F.eval_mask(x, y); },
                                            part, free_mask, win.reserve, assignments,
                                            limits.pair_cap, limits.retain_witnesses, scratch);

  GoodnessVerdict verdict;
  verdict.good = result.good;
  verdict.quantified_pairs = result.pairs;
  if (!result.good) {
    auto expand = [&](std::uint64_t rel) {
      std::uint64_t abs = 0;
      std::uint64_t m = free_mask;
      for (int i = 0; m; ++i, m &= m - 1) {
        if (rel >> i & 1) abs |= m & -m;
      }
      return abs;
    };
    FinSet b = FinSet::from_mask(part | expand(result.cex_t));
    FinSet B = FinSet::from_mask(win.mask() & ~expand(result.cex_r));
    verdict.counterexample = AnchoredPair(std::move(b), std::move(B));
  } else if (limits.retain_witnesses) {
    auto expand = [&](std::uint64_t rel) {
      std::uint64_t abs = 0;
      std::uint64_t m = free_mask;
      for (int i = 0; m; ++i, m &= m - 1) {
        if (rel >> i & 1) abs |= m & -m;
      }
      return abs;
    };
    for (const auto& [pair_rel, s_rel] : result.witnesses) {
      FinSet b = FinSet::from_mask(part | expand(pair_rel.first));
      FinSet B = FinSet::from_mask(win.mask() & ~expand(pair_rel.second));
      FinSet c = FinSet::from_mask(part | expand(pair_rel.first) | expand(s_rel));
      verdict.extension_map.push_back({AnchoredPair(std::move(b), std::move(B)), std::move(c)});
    }
  }
  return verdict;
}

bool reverify_counterexample(const PairColoring& F, const PartialColoring& f,
                             const AnchoredPair& cex, const Window& win) {
  const FinSet window = FinSet::from_mask(win.mask());
  const FinSet outside = window.minus(cex.ground);
  bool any_correct = false;
  for_each_subset_size_lex(outside.labels(), [&](const FinSet& s) {
    if (s.empty()) return true;
    FinSet c = cex.part.unite(s);
    if (is_f_correct(F, f, c).correct) {
      any_correct = true;
      return false;
    }
    return true;
  });
  return !any_correct;
}

}  // namespace cofinal
