#include <doctest.h>

#include "cofinal/coloring.hpp"
#include "cofinal/oracle.hpp"
#include "cofinal/ramsey.hpp"

using namespace cofinal;

namespace {
const PairColoring kParity = PairColoring::from_rule(Rule::Parity);
const PairColoring kConst1 = PairColoring::from_rule(Rule::Const1);
const PairColoring kTopSize = PairColoring::from_rule(Rule::TopSize);
const PairColoring kMaxGap = PairColoring::from_rule(Rule::MaxGap);
}  // namespace

TEST_CASE("rule evaluation") {
  CHECK(kParity.eval(FinSet{}, FinSet{1, 2}) == 1);
  CHECK(kParity.eval(FinSet{1}, FinSet{1, 2}) == 2);
  CHECK_THROWS_AS(kParity.eval(FinSet{1}, FinSet{1}), Error);

  CHECK(kConst1.eval(FinSet{}, FinSet{5}) == 1);
  CHECK(kTopSize.eval(FinSet{1}, FinSet{1, 2}) == 1);
  CHECK(kTopSize.eval(FinSet{1}, FinSet{1, 2, 3}) == 2);
  // empty part uses the -1 sentinel for its maximum
  CHECK(kMaxGap.eval(FinSet{}, FinSet{7}) == 1);
  CHECK(kMaxGap.eval(FinSet{1}, FinSet{0, 1}) == 1);
  CHECK(kMaxGap.eval(FinSet{1}, FinSet{1, 2}) == 2);
}

TEST_CASE("rule and mask evaluation agree") {
  for (std::uint64_t y = 1; y < 32; ++y) {
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      if (x != y) {
        for (const PairColoring* F : {&kParity, &kConst1, &kTopSize, &kMaxGap}) {
          CHECK(F->eval(FinSet::from_mask(x), FinSet::from_mask(y)) == F->eval_mask(x, y));
        }
      }
      if (x == 0) break;
    }
  }
}

TEST_CASE("table coloring domain") {
  auto pairs = canonical_pair_list(2);
  REQUIRE(pairs.size() == 5);
  std::map<std::pair<FinSet, FinSet>, Color> entries;
  for (const auto& p : pairs) entries[p] = 2;
  PairColoring table = PairColoring::from_table(2, 2, entries);
  CHECK(table.eval(FinSet{0}, FinSet{0, 1}) == 2);
  CHECK_THROWS_AS(table.eval(FinSet{0}, FinSet{0, 2}), Error);  // outside the window

  entries.erase(entries.begin());
  CHECK_THROWS_AS(PairColoring::from_table(2, 2, entries), Error);  // incomplete
}

TEST_CASE("f-correctness") {
  PartialColoring f(FinSet{1});
  f.assign(FinSet{1}, 2);
  CHECK(is_f_correct(kParity, f, FinSet{1, 2}).correct);
  auto result = is_f_correct(kParity, f, FinSet{1, 2, 3});
  CHECK_FALSE(result.correct);
  CHECK(*result.first_violation == FinSet{1});

  PartialColoring empty(FinSet{1});
  CHECK(is_f_correct(kConst1, empty, FinSet{1, 2}).correct);  // vacuous

  CHECK_THROWS_AS(is_f_correct(kParity, f, FinSet{1}), Error);  // base not proper subset
}

TEST_CASE("induced coloring matches the rule") {
  TotalColoring g = induced_total_coloring(kParity, FinSet{1}, FinSet{1, 2});
  CHECK(*g.at(FinSet{}) == 1);
  CHECK(*g.at(FinSet{1}) == 2);

  TotalColoring h = induced_total_coloring(kConst1, FinSet{0, 1}, FinSet{0, 1, 2});
  for (const auto& [key, color] : h.items()) CHECK(color == 1);

  TotalColoring e = induced_total_coloring(kParity, FinSet{}, FinSet{7});
  CHECK(*e.at(FinSet{}) == 2);
}

TEST_CASE("induced colorings are correct by construction, window of 4") {
  for (const PairColoring* F : {&kParity, &kConst1, &kTopSize, &kMaxGap}) {
    for (std::uint64_t c = 1; c < 16; ++c) {
      for (std::uint64_t b = c;; b = (b - 1) & c) {
        if (b != c) {
          TotalColoring g =
              induced_total_coloring(*F, FinSet::from_mask(b), FinSet::from_mask(c));
          CHECK(is_f_correct(*F, g, FinSet::from_mask(c)).correct);
        }
        if (b == 0) break;
      }
    }
  }
}

TEST_CASE("restriction law") {
  // b f-correct and f' a submap of f imply b f'-correct
  std::uint64_t state = 42;
  for (int trial = 0; trial < 200; ++trial) {
    FinSet base = FinSet::from_mask(splitmix64(state) % 8);
    FinSet b = base.unite(FinSet{3, static_cast<Label>(4 + splitmix64(state) % 3)});
    TotalColoring f = induced_total_coloring(kMaxGap, base, b);  // correct for b
    REQUIRE(is_f_correct(kMaxGap, f, b).correct);
    PartialColoring sub(base);
    for (const auto& [key, color] : f.items()) {
      if (splitmix64(state) % 2 == 0) sub.assign(key, color);
    }
    CHECK(sub.submap_of(f));
    CHECK(is_f_correct(kMaxGap, sub, b).correct);
  }
}

TEST_CASE("total coloring enumeration") {
  CHECK(enumerate_total_colorings(FinSet{}, 2).size() == 2);
  CHECK(enumerate_total_colorings(FinSet{5}, 2).size() == 4);
  CHECK(enumerate_total_colorings(FinSet{1, 2}, 3).size() == 81);
  CHECK_THROWS_AS(enumerate_total_colorings(FinSet{0, 1, 2, 3, 4}, 2), Error);

  auto all = enumerate_total_colorings(FinSet{5}, 2);
  // lexicographic over the (size,lex> subset keys: all-1 first, all-2 last
  CHECK(*all.front().at(FinSet{}) == 1);
  CHECK(*all.front().at(FinSet{5}) == 1);
  CHECK(*all.back().at(FinSet{}) == 2);
  CHECK(*all.back().at(FinSet{5}) == 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  }
}

TEST_CASE("derived coloring f^H_a") {
  SUBCASE("single witness") {
    auto derived = derive_f_H_a(kConst1, {FinSet{0}, FinSet{0, 1}}, FinSet{0, 2});
    CHECK(derived.f.domain_size() == 1);
    CHECK(*derived.f.at(FinSet{0}) == 1);
    CHECK(derived.omitted.empty());
  }
  SUBCASE("vacuous") {
    auto derived = derive_f_H_a(kParity, {}, FinSet{0, 1});
    CHECK(derived.f.domain_size() == 0);
  }
  SUBCASE("agreeing witnesses of odd gap") {
    // both witnesses of {0} have odd gap, so they agree on color 2
    auto derived =
        derive_f_H_a(kParity, {FinSet{0}, FinSet{0, 1}, FinSet{0, 1, 2, 3}}, FinSet{0, 9});
    CHECK(*derived.f.at(FinSet{0}) == 2);
  }
  SUBCASE("disagreeing witnesses") {
    CHECK_THROWS_AS(
        derive_f_H_a(kParity, {FinSet{0}, FinSet{0, 1}, FinSet{0, 1, 2}}, FinSet{0, 9}), Error);
  }
  SUBCASE("member without witness is omitted") {
    auto derived = derive_f_H_a(kParity, {FinSet{0}}, FinSet{0, 2});
    CHECK(derived.f.domain_size() == 0);
    REQUIRE(derived.omitted.size() == 1);
    CHECK(derived.omitted.front() == FinSet{0});
  }
}

TEST_CASE("derivation never errors on an end-homogeneous family") {
  // the family produced by extraction is end-homogeneous by construction, so
  // no witness pair can disagree, whatever base the derivation targets
  for (const PairColoring* F : {&kParity, &kConst1, &kTopSize, &kMaxGap}) {
    Chain chain = Chain::prefix_chain([](std::size_t i) { return static_cast<Label>(i); }, 10);
    auto eh = extract_end_homogeneous(*F, chain);
    REQUIRE(eh.verify(*F).empty());
    const std::vector<FinSet>& H = eh.subsequence.sets();
    for (const FinSet& member : H) {
      CHECK_NOTHROW(derive_f_H_a(*F, H, member));
    }
    CHECK_NOTHROW(derive_f_H_a(*F, H, FinSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK_NOTHROW(derive_f_H_a(*F, H, FinSet{0, 3, 11}));
  }
}
