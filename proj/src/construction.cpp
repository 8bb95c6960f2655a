#include "cofinal/construction.hpp"

#include <algorithm>

namespace cofinal {

namespace {

// Largest free-tail size whose goodness scan stays under the pair cap.
int ground_room_cap(std::uint64_t pair_cap, int reserve) {
  int room = 0;
  while (room + 1 <= 22 &&
         detail::saturating_pair_count(room + 1, reserve) <= pair_cap) {
    ++room;
  }
  return room;
}

// The searched ground: everything already claimed plus all free labels except
// a bounded tail of the largest ones. A large ground keeps the goodness
// quantification exhaustive within the pair cap, and the leftover tail is
// where later extensions live.
FinSet choose_ground(const FinSet& base, const Window& win, const GoodnessLimits& limits) {
  FinSet window = FinSet::from_mask(win.mask());
  FinSet free = window.minus(base);
  int room = std::min<int>(static_cast<int>(free.size()),
                           ground_room_cap(limits.pair_cap, win.reserve));
  std::vector<Label> keep(free.labels().begin(),
                          free.labels().end() - room);
  return base.unite(FinSet::from_sorted(std::move(keep)));
}

std::optional<LemmaWitness> search_witness(const PairColoring& F, const AnchoredPair& q,
                                           const PartialColoring* f, const Window& win,
                                           const GoodnessLimits& limits) {
  if (q.part.size() > limits.part_cap) {
    fail(Errc::CapExceeded, "pair part exceeds the enumeration cap");
  }
  if (!q.ground.empty() && q.ground.max() >= static_cast<Label>(win.width)) {
    fail(Errc::InvalidInput, "pair ground extends outside the window");
  }
  const FinSet window = FinSet::from_mask(win.mask());
  const FinSet outside = window.minus(q.ground);

  std::optional<LemmaWitness> found;
  std::size_t examined = 0;
  for_each_subset_size_lex(outside.labels(), [&](const FinSet& s) {
    if (s.empty()) return true;
    if (++examined > limits.candidate_cap) return false;
    FinSet c = q.part.unite(s);
    if (f && !is_f_correct(F, *f, c).correct) return true;
    TotalColoring g = induced_total_coloring(F, q.part, c);
    FinSet C = choose_ground(q.ground.unite(c), win, limits);
    GoodnessLimits inner = limits;
    inner.retain_witnesses = false;
    GoodnessVerdict verdict = is_good_bounded(F, AnchoredPair(c, C), g, win, inner);
    // vacuously good pairs (no admissible extension ground left) are window
    // artifacts, not usable witnesses
    if (verdict.good && verdict.quantified_pairs > 0) {
      found = LemmaWitness{std::move(g), std::move(c), std::move(C), verdict.quantified_pairs};
      return false;
    }
    return true;
  });
  return found;
}

FinSet first_elements(const FinSet& s, std::size_t n) {
  std::vector<Label> out(s.labels().begin(),
                         s.labels().begin() + std::min(n, s.size()));
  return FinSet::from_sorted(std::move(out));
}

struct SplitFamilies {
  std::vector<FinSet> G;
  std::vector<FinSet> H;
};

// d0 < e0 < d1 < e1 < ...: even positions to G, odd to H.
SplitFamilies alternate(const std::vector<FinSet>& members) {
  SplitFamilies out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    (i % 2 == 0 ? out.G : out.H).push_back(members[i]);
  }
  return out;
}

}  // namespace

std::optional<LemmaWitness> lemma22_search(const PairColoring& F, const AnchoredPair& q,
                                           const Window& win, const GoodnessLimits& limits) {
  return search_witness(F, q, nullptr, win, limits);
}

std::optional<LemmaWitness> lemma23_search(const PairColoring& F, const AnchoredPair& p,
                                           const PartialColoring& f, const AnchoredPair& q,
                                           const Window& win, const GoodnessLimits& limits) {
  if (!pair_le(p, q)) fail(Errc::InvalidInput, "q does not extend p in the pair order");
  if (!is_good_bounded(F, p, f, win, limits).good) {
    fail(Errc::InvalidInput, "pair is not good for the given partial coloring");
  }
  return search_witness(F, q, &f, win, limits);
}

Approximation build_approximation(const PairColoring& F, const Window& win, std::size_t depth,
                                  const GoodnessLimits& limits) {
  if (depth < 1) fail(Errc::InvalidInput, "depth must be positive");
  if (static_cast<std::size_t>(win.width) < depth * (depth + 3) / 2) {
    fail(Errc::WindowExhausted, "window too small for the requested depth");
  }
  GoodnessLimits build_limits = limits;
  build_limits.part_cap = PartialColoring::kMaxBase;

  std::vector<ApproximationStep> log;
  FinSet b{0};
  FinSet ground = b;
  for (std::size_t i = 0; i < depth; ++i) {
    auto witness = lemma22_search(F, AnchoredPair(b, ground), win, build_limits);
    if (!witness) {
      throw StuckError("extension search found no good pair at step " + std::to_string(i),
                       std::move(log));
    }
    log.push_back({b, witness->g, witness->c, witness->C});
    // b_{i+1} = c_i plus the first i elements of every earlier ground
    FinSet next = witness->c;
    for (std::size_t j = 0; j <= i; ++j) next = next.unite(first_elements(log[j].C, i));
    b = std::move(next);
    ground = witness->C.unite(b);
  }

  std::vector<FinSet> chain_sets;
  for (const auto& step : log) chain_sets.push_back(step.c);
  HomogeneousCertificate hom = extract_homogeneous(F, extract_end_homogeneous(F, Chain(chain_sets)));
  SplitFamilies fam = alternate(hom.members);

  Approximation approx;
  approx.ground_prefix = log.back().C;
  for (const auto& step : log) approx.ground_prefix = approx.ground_prefix.unite(step.C);
  approx.G = std::move(fam.G);
  approx.H = std::move(fam.H);
  approx.green = hom.color;
  approx.log = std::move(log);
  return approx;
}

Approximation extend_approximation(const PairColoring& F, const Approximation& approx, Label xi,
                                   const Window& win, std::size_t depth,
                                   const GoodnessLimits& limits) {
  if (xi >= static_cast<Label>(win.width)) fail(Errc::InvalidInput, "xi outside the window");
  if (approx.ground_prefix.contains(xi)) {
    fail(Errc::InvalidInput, "xi already lies in the approximation's ground");
  }
  if (approx.G.empty()) fail(Errc::InvalidInput, "approximation has no G member to extend from");

  GoodnessLimits build_limits = limits;
  build_limits.part_cap = PartialColoring::kMaxBase;

  const FinSet& A = approx.ground_prefix;
  std::vector<FinSet> anchors = approx.G;
  std::sort(anchors.begin(), anchors.end(), SizeLexLess{});
  const std::size_t steps = std::min(depth, anchors.size());
  if (steps < 1) fail(Errc::InvalidInput, "depth must be positive");

  std::vector<ApproximationStep> log;
  FinSet ground = A;
  for (std::size_t n = 0; n < steps; ++n) {
    const FinSet& a_n = anchors[n];
    PartialColoring f_n = derive_f_H_a(F, approx.H, a_n).f;
    FinSet b;
    if (n == 0) {
      b = a_n.with(xi);
    } else {
      b = a_n.unite(log[n - 1].c.minus(A));
      for (std::size_t j = 0; j < n; ++j) b = b.unite(first_elements(log[j].C.minus(A), n));
    }
    AnchoredPair q(b, ground.unite(b));
    auto witness = lemma23_search(F, AnchoredPair(a_n, A), f_n, q, win, build_limits);
    if (!witness) {
      throw StuckError("constrained extension search found no good pair at step " +
                           std::to_string(n),
                       std::move(log));
    }
    log.push_back({std::move(b), witness->g, witness->c, witness->C});
    ground = witness->C;
  }

  std::vector<FinSet> chain_sets;
  for (const auto& step : log) chain_sets.push_back(step.c);
  HomogeneousCertificate hom = extract_homogeneous(F, extract_end_homogeneous(F, Chain(chain_sets)));
  SplitFamilies fam = alternate(hom.members);

  Approximation out;
  out.ground_prefix = ground.unite(A);
  out.G = approx.G;
  out.G.insert(out.G.end(), fam.G.begin(), fam.G.end());
  out.H = approx.H;
  out.H.insert(out.H.end(), fam.H.begin(), fam.H.end());
  std::sort(out.G.begin(), out.G.end(), SizeLexLess{});
  std::sort(out.H.begin(), out.H.end(), SizeLexLess{});
  out.green = approx.green;
  out.log = approx.log;
  out.log.insert(out.log.end(), log.begin(), log.end());
  return out;
}

std::size_t dominance_prefix(const std::vector<FinSet>& members, const FinSet& ground) {
  std::size_t best = 0;
  std::vector<Label> prefix;
  for (Label x : ground.labels()) {
    prefix.push_back(x);
    FinSet p = FinSet::from_sorted(prefix);
    bool covered = false;
    for (const FinSet& h : members) {
      if (p.subset_of(h)) {
        covered = true;
        break;
      }
    }
    if (!covered) break;
    ++best;
  }
  return best;
}

ApproximationReport verify_approximation(const PairColoring& F, const Approximation& approx,
                                         const Window& win, const GoodnessLimits& limits) {
  ApproximationReport report;

  // (i) disjointness and containment in the ground prefix
  report.disjoint.pass = true;
  for (const FinSet& g : approx.G) {
    if (std::find(approx.H.begin(), approx.H.end(), g) != approx.H.end()) {
      report.disjoint.pass = false;
      report.disjoint.detail = "member in both families: " + g.to_string();
      break;
    }
  }
  if (report.disjoint.pass) {
    for (const FinSet& m : approx.G) {
      if (!m.subset_of(approx.ground_prefix)) {
        report.disjoint.pass = false;
        report.disjoint.detail = "G member outside the ground prefix: " + m.to_string();
      }
    }
    for (const FinSet& m : approx.H) {
      if (!m.subset_of(approx.ground_prefix)) {
        report.disjoint.pass = false;
        report.disjoint.detail = "H member outside the ground prefix: " + m.to_string();
      }
    }
  }

  // (ii) both families dominate a nonempty prefix of the ground
  report.coverage_G = dominance_prefix(approx.G, approx.ground_prefix);
  report.coverage_H = dominance_prefix(approx.H, approx.ground_prefix);
  report.dominance.pass = report.coverage_G >= 1 && report.coverage_H >= 1;
  if (!report.dominance.pass) {
    report.dominance.detail = "coverage G=" + std::to_string(report.coverage_G) +
                              " H=" + std::to_string(report.coverage_H);
  }

  // (iii) end-homogeneity of H, exhaustive scan
  report.end_homogeneous.pass = true;
  for (const FinSet& x : approx.H) {
    std::optional<Color> seen;
    const FinSet* first = nullptr;
    for (const FinSet& y : approx.H) {
      if (!x.proper_subset_of(y)) continue;
      Color c = F.eval(x, y);
      if (!seen) {
        seen = c;
        first = &y;
      } else if (*seen != c) {
        report.end_homogeneous.pass = false;
        report.end_homogeneous.detail = "colors of (" + x.to_string() + "," + first->to_string() +
                                        ") and (" + x.to_string() + "," + y.to_string() +
                                        ") differ";
        break;
      }
    }
    if (!report.end_homogeneous.pass) break;
  }

  // (iv) every a in G good for f^H_a
  report.goodness.pass = true;
  for (const FinSet& a : approx.G) {
    try {
      PartialColoring f = derive_f_H_a(F, approx.H, a).f;
      GoodnessVerdict verdict =
          is_good_bounded(F, AnchoredPair(a, approx.ground_prefix), f, win, limits);
      if (!verdict.good) {
        report.goodness.pass = false;
        report.goodness.detail = "(" + a.to_string() + ", ground) not good for f^H_a";
        break;
      }
    } catch (const Error& e) {
      if (e.code() == Errc::CapExceeded) throw;
      report.goodness.pass = false;
      report.goodness.detail = std::string("derivation failed: ") + e.what();
      break;
    }
  }
  return report;
}

}  // namespace cofinal
