#include <doctest.h>

#include <bit>

#include "cofinal/construction.hpp"
#include "cofinal/oracle.hpp"

using namespace cofinal;

namespace {

const PairColoring kParity = PairColoring::from_rule(Rule::Parity);
const PairColoring kConst1 = PairColoring::from_rule(Rule::Const1);

PartialColoring empty_to(Color c) {
  PartialColoring f((FinSet{}));
  f.assign(FinSet{}, c);
  return f;
}

// Literal reference quantification: every (b,B) >= p with b <= B inside the
// window and at least `reserve` labels outside B, not just the maximal
// grounds the engine scans.
bool literally_good(const PairColoring& F, const AnchoredPair& p, const PartialColoring& f,
                    const Window& win) {
  const std::uint64_t window = win.mask();
  const std::uint64_t ground = p.ground.to_mask();
  const std::uint64_t part = p.part.to_mask();
  const std::uint64_t free_mask = window & ~ground;
  for (std::uint64_t bf = free_mask;; bf = (bf - 1) & free_mask) {  // B = ground | bf
    std::uint64_t B = ground | bf;
    if (std::popcount(window & ~B) >= win.reserve) {
      std::uint64_t slack = bf;
      for (std::uint64_t t = slack;; t = (t - 1) & slack) {  // b = part | t
        std::uint64_t b = part | t;
        bool satisfied = false;
        std::uint64_t outside = window & ~B;
        for (std::uint64_t s = outside; s && !satisfied; s = (s - 1) & outside) {
          std::uint64_t c = b | s;
          bool correct = true;
          for (const auto& [x, color] : f.items()) {
            if (F.eval_mask(x.to_mask(), c) != color) {
              correct = false;
              break;
            }
          }
          satisfied = correct;
        }
        if (!satisfied) return false;
        if (t == 0) break;
      }
    }
    if (bf == 0) break;
  }
  return true;
}

}  // namespace

TEST_CASE("goodness verdicts on the small window") {
  Window win(3, 1);
  AnchoredPair origin((FinSet{}), (FinSet{}));

  CHECK(is_good_bounded(kConst1, origin, empty_to(1), win).good);

  auto bad = is_good_bounded(kConst1, origin, empty_to(2), win);
  CHECK_FALSE(bad.good);
  REQUIRE(bad.counterexample.has_value());
  CHECK(reverify_counterexample(kConst1, empty_to(2), *bad.counterexample, win));

  auto parity = is_good_bounded(kParity, origin, empty_to(1), win);
  CHECK_FALSE(parity.good);
  REQUIRE(parity.counterexample.has_value());
  CHECK(reverify_counterexample(kParity, empty_to(1), *parity.counterexample, win));
  // a differently chosen pair is a counterexample too: ({0,1},{0,1}) only
  // extends to {0,1,2}, whose gap is odd
  CHECK(reverify_counterexample(kParity, empty_to(1),
                                AnchoredPair(FinSet{0, 1}, FinSet{0, 1}), win));
}

TEST_CASE("goodness is vacuous when no ground has room") {
  Window win(3, 1);
  AnchoredPair full(FinSet{0, 1, 2}, FinSet{0, 1, 2});
  PartialColoring f(FinSet{0, 1, 2});
  f.assign(FinSet{0}, 2);
  auto verdict = is_good_bounded(kParity, full, f, win);
  CHECK(verdict.good);
  CHECK(verdict.quantified_pairs == 0);
}

TEST_CASE("goodness preconditions and caps") {
  Window win(3, 1);
  CHECK_THROWS_AS(
      is_good_bounded(kConst1, AnchoredPair(FinSet{5}, FinSet{5}), empty_to(1), win), Error);
  PartialColoring f(FinSet{1});
  f.assign(FinSet{1}, 1);
  CHECK_THROWS_AS(
      is_good_bounded(kConst1, AnchoredPair((FinSet{}), (FinSet{})), f, win), Error);

  GoodnessLimits tiny;
  tiny.pair_cap = 3;
  CHECK_THROWS_AS(is_good_bounded(kConst1, AnchoredPair((FinSet{}), (FinSet{})), empty_to(1),
                                  Window(6, 1), tiny),
                  Error);
}

TEST_CASE("engine verdict equals the literal quantification") {
  // The engine scans maximal grounds only; cross-check against the reference
  // that quantifies every (b,B), over random table colorings, every anchored
  // pair of the window, and both reserve values that fit.
  std::uint64_t state = 7;
  for (int window : {3, 4}) {
    auto pair_count = canonical_pair_list(window).size();
    const std::uint64_t full = (std::uint64_t{1} << window) - 1;
    for (int reserve = 1; reserve < window; ++reserve) {
      Window win(window, reserve);
      int trials = window == 3 ? 40 : 12;
      for (int trial = 0; trial < trials; ++trial) {
        std::vector<Color> colors(pair_count);
        for (auto& c : colors) c = static_cast<Color>(splitmix64(state) % 2) + 1;
        PairColoring table = PairColoring::from_dense_table(2, window, colors);
        for (std::uint64_t A = 0; A <= full; ++A) {
          for (std::uint64_t a = A;; a = (a - 1) & A) {
            AnchoredPair p(FinSet::from_mask(a), FinSet::from_mask(A));
            PartialColoring f(FinSet::from_mask(a));
            for_each_subset_size_lex(p.part.labels(), [&](const FinSet& key) {
              std::uint64_t roll = splitmix64(state) % 3;
              if (roll) f.assign(key, static_cast<Color>(roll));
              return true;
            });
            CHECK(is_good_bounded(table, p, f, win).good == literally_good(table, p, f, win));
            if (a == 0) break;
          }
        }
      }
    }
  }
}

TEST_CASE("lemma22 search") {
  SUBCASE("constant coloring, pinned witness") {
    auto witness = lemma22_search(kConst1, AnchoredPair((FinSet{}), (FinSet{})), Window(4, 1));
    REQUIRE(witness.has_value());
    CHECK(witness->c == FinSet{0});
    CHECK(witness->C == FinSet{0});
    for (const auto& [key, color] : witness->g.items()) CHECK(color == 1);
  }
  SUBCASE("part cap") {
    AnchoredPair q(FinSet{0, 1, 2, 3, 4}, FinSet{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(lemma22_search(kConst1, q, Window(8, 1)), Error);
  }
  SUBCASE("every returned witness re-verifies") {
    for (Rule rule : {Rule::Const1, Rule::Parity, Rule::TopSize, Rule::MaxGap}) {
      PairColoring F = PairColoring::from_rule(rule);
      for (const Window& win : {Window(4, 1), Window(6, 2), Window(8, 2)}) {
        for (const AnchoredPair& q :
             {AnchoredPair((FinSet{}), (FinSet{})), AnchoredPair(FinSet{0}, FinSet{0}),
              AnchoredPair(FinSet{1}, FinSet{0, 1})}) {
          auto witness = lemma22_search(F, q, win);
          if (rule == Rule::Const1) REQUIRE(witness.has_value());
          if (!witness) continue;
          CHECK(pair_le(q, AnchoredPair(witness->c, witness->C)));
          CHECK(is_a_extension(q.part, q.ground, witness->c, /*proper=*/true));
          CHECK(is_f_correct(F, witness->g, witness->c).correct);
          CHECK(is_good_bounded(F, AnchoredPair(witness->c, witness->C), witness->g, win).good);
        }
      }
    }
  }
}

TEST_CASE("lemma23 search") {
  SUBCASE("constant coloring") {
    auto witness = lemma23_search(kConst1, AnchoredPair((FinSet{}), (FinSet{})), empty_to(1),
                                  AnchoredPair((FinSet{}), FinSet{0}), Window(4, 1));
    REQUIRE(witness.has_value());
    CHECK(*witness->g.at(FinSet{}) == 1);
    CHECK(empty_to(1).submap_of(witness->g));
  }
  SUBCASE("precondition: p must be good for f") {
    CHECK_THROWS_AS(lemma23_search(kConst1, AnchoredPair((FinSet{}), (FinSet{})), empty_to(2),
                                   AnchoredPair((FinSet{}), FinSet{0}), Window(4, 1)),
                    Error);
  }
  SUBCASE("precondition: pair order") {
    CHECK_THROWS_AS(lemma23_search(kConst1, AnchoredPair(FinSet{0}, FinSet{0}), empty_to(1),
                                   AnchoredPair(FinSet{1}, FinSet{1}), Window(4, 1)),
                    Error);
  }
  SUBCASE("returned colorings extend f and re-verify") {
    auto witness = lemma23_search(kParity, AnchoredPair((FinSet{}), (FinSet{})), empty_to(1),
                                  AnchoredPair((FinSet{}), FinSet{0}), Window(6, 2));
    if (witness) {
      PartialColoring f = empty_to(1);
      CHECK(f.submap_of(witness->g));
      CHECK(is_good_bounded(kParity, AnchoredPair(witness->c, witness->C), witness->g,
                            Window(6, 2))
                .good);
    }
  }
}

TEST_CASE("approximation build and verification") {
  Window win(40, 2);
  Approximation approx = build_approximation(kConst1, win, 6);
  CHECK(approx.G.size() == 3);
  CHECK(approx.H.size() == 3);
  CHECK(approx.green == 1);

  auto report = verify_approximation(kConst1, approx, win);
  CHECK(report.all());
  CHECK(report.coverage_G >= 1);
  CHECK(report.coverage_H >= 1);

  SUBCASE("absorption schedule") {
    // b_m contains the first m-1 elements of every earlier ground
    for (std::size_t m = 1; m < approx.log.size(); ++m) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto& C = approx.log[j].C.labels();
        std::vector<Label> head(C.begin(), C.begin() + std::min<std::size_t>(m - 1, C.size()));
        CHECK(FinSet::from_sorted(head).subset_of(approx.log[m].b));
      }
    }
  }
  SUBCASE("chain of extensions lives inside the accumulated ground") {
    FinSet cs, Cs;
    for (const auto& step : approx.log) {
      cs = cs.unite(step.c);
      Cs = Cs.unite(step.C);
    }
    CHECK(cs.subset_of(Cs));
    CHECK(Cs == approx.ground_prefix);
  }
}

TEST_CASE("window guard") {
  CHECK_THROWS_AS(build_approximation(kConst1, Window(5, 1), 6), Error);
  try {
    build_approximation(kConst1, Window(5, 1), 6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WindowExhausted);
  }
}

TEST_CASE("parity build at window 60") {
  Window win(60, 2);
  Approximation approx = build_approximation(kParity, win, 8);
  auto report = verify_approximation(kParity, approx, win);
  CHECK(report.all());
  // frozen from the first verified run
  CHECK(approx.G.size() == 3);
  CHECK(approx.H.size() == 3);
  CHECK(approx.H.back() ==
        FinSet{0, 1, 2, 3, 4, 5, 45, 46, 47, 48, 49, 50, 51});
}

TEST_CASE("builds under the remaining rules") {
  Window win(40, 2);
  // the top-size rule behaves like parity under extension
  Approximation topsize = build_approximation(PairColoring::from_rule(Rule::TopSize), win, 6);
  CHECK(verify_approximation(PairColoring::from_rule(Rule::TopSize), topsize, win).all());

  // under the max-gap rule the search absorbs the window's top label, which
  // freezes the induced coloring across every later extension
  Approximation maxgap = build_approximation(PairColoring::from_rule(Rule::MaxGap), win, 6);
  CHECK(verify_approximation(PairColoring::from_rule(Rule::MaxGap), maxgap, win).all());
  for (const FinSet& member : maxgap.H) CHECK(member.contains(39));
}

TEST_CASE("extension past a fresh label") {
  Window win(40, 2);
  Approximation approx = build_approximation(kConst1, win, 6);
  Approximation extended = extend_approximation(kConst1, approx, 30, win, 3);

  CHECK(extended.ground_prefix.contains(30));
  auto report = verify_approximation(kConst1, extended, win);
  CHECK(report.all());

  // old families are exactly the members living inside the old ground
  auto restrict = [&](const std::vector<FinSet>& family) {
    std::vector<FinSet> out;
    for (const FinSet& m : family) {
      if (m.subset_of(approx.ground_prefix)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), SizeLexLess{});
    return out;
  };
  auto sorted = [](std::vector<FinSet> v) {
    std::sort(v.begin(), v.end(), SizeLexLess{});
    return v;
  };
  CHECK(restrict(extended.G) == sorted(approx.G));
  CHECK(restrict(extended.H) == sorted(approx.H));
  CHECK(extended.G.size() > approx.G.size());

  SUBCASE("used label is rejected") {
    CHECK_THROWS_AS(extend_approximation(kConst1, approx, 0, win, 3), Error);
  }
  SUBCASE("label outside the window is rejected") {
    CHECK_THROWS_AS(extend_approximation(kConst1, approx, 60, win, 3), Error);
  }
  SUBCASE("extensions iterate") {
    Approximation again = extend_approximation(kConst1, extended, 38, win, 2);
    CHECK(again.ground_prefix.contains(30));
    CHECK(again.ground_prefix.contains(38));
    CHECK(verify_approximation(kConst1, again, win).all());
  }
}

TEST_CASE("parity extension re-verifies") {
  Window win(60, 2);
  Approximation approx = build_approximation(kParity, win, 8);
  Approximation extended = extend_approximation(kParity, approx, 52, win, 3);
  CHECK(extended.ground_prefix.contains(52));
  CHECK(extended.G.size() > approx.G.size());
  CHECK(verify_approximation(kParity, extended, win).all());
}

TEST_CASE("verification failures are reported, not thrown") {
  Window win(10, 2);
  SUBCASE("empty families fail dominance") {
    Approximation approx;
    approx.ground_prefix = FinSet{0, 1};
    auto report = verify_approximation(kConst1, approx, win);
    CHECK_FALSE(report.dominance.pass);
    CHECK(report.coverage_G == 0);
  }
  SUBCASE("an end-inhomogeneous H is caught") {
    Approximation approx;
    approx.ground_prefix = FinSet{0, 1, 2};
    approx.G = {FinSet{0}};
    // gaps 1 then 2: the outgoing colors of {0} differ under parity
    approx.H = {FinSet{0}, FinSet{0, 1}, FinSet{0, 1, 2}};
    auto report = verify_approximation(kParity, approx, win);
    CHECK_FALSE(report.end_homogeneous.pass);
  }
  SUBCASE("disjointness violations are caught") {
    Approximation approx;
    approx.ground_prefix = FinSet{0, 1};
    approx.G = {FinSet{0}};
    approx.H = {FinSet{0}, FinSet{0, 1}};
    auto report = verify_approximation(kConst1, approx, win);
    CHECK_FALSE(report.disjoint.pass);
  }
}
