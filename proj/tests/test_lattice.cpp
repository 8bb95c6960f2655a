#include <doctest.h>

#include "cofinal/finset.hpp"
#include "cofinal/oracle.hpp"
#include "cofinal/poset.hpp"

using namespace cofinal;

TEST_CASE("canonicalize sorts and deduplicates") {
  CHECK(FinSet::canonicalize({3, 1, 3}) == FinSet{1, 3});
  CHECK(FinSet::canonicalize({}) == FinSet{});
  CHECK(FinSet::canonicalize({0, 1, 2}) == FinSet{0, 1, 2});
}

TEST_CASE("from_sorted rejects non-canonical input") {
  CHECK_THROWS_AS(FinSet::from_sorted({2, 1}), Error);
  CHECK_THROWS_AS(FinSet::from_sorted({1, 1}), Error);
}

TEST_CASE("proper subset") {
  CHECK(is_proper_subset(FinSet{1}, FinSet{1, 2}));
  CHECK_FALSE(is_proper_subset(FinSet{1}, FinSet{1}));
  CHECK_FALSE(is_proper_subset(FinSet{1, 3}, FinSet{1, 2}));
}

TEST_CASE("a-extension") {
  CHECK(is_a_extension(FinSet{1}, FinSet{1, 2}, FinSet{1, 3}));
  CHECK_FALSE(is_a_extension(FinSet{1}, FinSet{1, 2}, FinSet{1, 2, 3}));
  CHECK_FALSE(is_a_extension(FinSet{1}, FinSet{1, 2}, FinSet{1}, /*proper=*/true));
  CHECK(is_a_extension(FinSet{1}, FinSet{1, 2}, FinSet{1}, /*proper=*/false));
  CHECK_THROWS_AS(is_a_extension(FinSet{3}, FinSet{1, 2}, FinSet{3}), Error);
}

TEST_CASE("a-extension closed under adding labels outside A") {
  // deterministic sweep in a small universe
  const FinSet A{0, 2, 4};
  const FinSet a{0, 2};
  for (std::uint64_t b_mask = 0; b_mask < 64; ++b_mask) {
    FinSet b = FinSet::from_mask(b_mask);
    if (!is_a_extension(a, A, b)) continue;
    for (std::uint64_t s_mask = 0; s_mask < 1024; ++s_mask) {
      FinSet s = FinSet::from_mask(s_mask << 5);  // labels >= 5, disjoint from A
      CHECK(is_a_extension(a, A, b.unite(s)));
    }
  }
}

TEST_CASE("pair order") {
  AnchoredPair p(FinSet{1}, FinSet{1, 2});
  CHECK(pair_le(p, AnchoredPair(FinSet{1, 3}, FinSet{1, 2, 3})));
  CHECK_FALSE(pair_le(p, AnchoredPair(FinSet{1, 2}, FinSet{1, 2})));
  CHECK(pair_le(p, p));  // b cap A = a when b = a
}

TEST_CASE("pair order transitive on a window of size 4") {
  // every anchored pair with ground inside {0..3}
  std::vector<AnchoredPair> pairs;
  for (std::uint64_t A = 0; A < 16; ++A) {
    for (std::uint64_t a = A;; a = (a - 1) & A) {
      pairs.emplace_back(FinSet::from_mask(a), FinSet::from_mask(A));
      if (a == 0) break;
    }
  }
  REQUIRE(pairs.size() == 81);
  std::size_t checked = 0;
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      if (!pair_le(p, q)) continue;
      for (const auto& r : pairs) {
        if (pair_le(q, r)) {
          CHECK(pair_le(p, r));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("dominates") {
  auto all_subsets_of = [](const FinSet& s) {
    std::vector<FinSet> out;
    for_each_subset_size_lex(s.labels(), [&](const FinSet& x) {
      out.push_back(x);
      return true;
    });
    return out;
  };

  SUBCASE("cofinal with witnesses") {
    auto report = dominates({FinSet{0, 1}, FinSet{2}}, all_subsets_of(FinSet{0, 1}));
    CHECK(report.cofinal);
    for (const auto& [target, witness] : report.witness_map) CHECK(target.subset_of(witness));
  }
  SUBCASE("counterexample") {
    auto report = dominates({FinSet{0}}, {FinSet{1}});
    CHECK_FALSE(report.cofinal);
    REQUIRE(report.counterexample.has_value());
    CHECK(*report.counterexample == FinSet{1});
  }
  SUBCASE("vacuous") {
    auto report = dominates({}, {});
    CHECK(report.cofinal);
  }
  SUBCASE("monotone in H") {
    std::vector<FinSet> targets = all_subsets_of(FinSet{0, 1, 2});
    std::vector<FinSet> H = {FinSet{0, 1, 2}};
    REQUIRE(dominates(H, targets).cofinal);
    for (std::uint64_t extra = 0; extra < 32; ++extra) {
      auto enlarged = H;
      enlarged.push_back(FinSet::from_mask(extra));
      CHECK(dominates(enlarged, targets).cofinal);
    }
  }
}

TEST_CASE("subset enumeration order is (size, lex)") {
  std::vector<FinSet> seen;
  for_each_subset_size_lex(FinSet{0, 1, 2}.labels(), [&](const FinSet& s) {
    seen.push_back(s);
    return true;
  });
  std::vector<FinSet> expected = {FinSet{},     FinSet{0},    FinSet{1},    FinSet{2},
                                  FinSet{0, 1}, FinSet{0, 2}, FinSet{1, 2}, FinSet{0, 1, 2}};
  CHECK(seen == expected);
}

TEST_CASE("poset closure and queries") {
  // generating chain 0 < 1 < 2; closure must add 0 < 2
  FinPoset poset(3, {{0, 1}, {1, 2}});
  CHECK(poset.less(0, 2));
  CHECK_FALSE(poset.less(2, 0));
  CHECK(poset.directed());
  CHECK(poset.maximal_elements() == std::vector<std::size_t>{2});
  CHECK(poset.predecessor_count(2) == 2);

  FinPoset antichain(2, {});
  CHECK_FALSE(antichain.directed());

  CHECK_THROWS_AS(FinPoset(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(FinPoset(1, {{0, 0}}), Error);
}
