#include <doctest.h>

#include "cofinal/ramsey.hpp"

using namespace cofinal;

namespace {

const PairColoring kParity = PairColoring::from_rule(Rule::Parity);
const PairColoring kConst1 = PairColoring::from_rule(Rule::Const1);

Chain standard_chain(std::size_t n) {
  return Chain::prefix_chain([](std::size_t i) { return static_cast<Label>(i); }, n);
}

// independent size bound: floor(log_k(N(k-1)+1)) without floating point
std::size_t eh_lower_bound(std::size_t n, int k) {
  std::size_t value = n * static_cast<std::size_t>(k - 1) + 1;
  std::size_t e = 0;
  std::size_t power = 1;
  while (power <= value / static_cast<std::size_t>(k)) {
    power *= static_cast<std::size_t>(k);
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(Chain({FinSet{0, 1}, FinSet{0}}), Error);
  CHECK_THROWS_AS(Chain({FinSet{0}, FinSet{0}}), Error);
  CHECK_NOTHROW(Chain({FinSet{0}, FinSet{0, 1}}));
}

TEST_CASE("parity N=8 extraction, pinned") {
  Chain chain = standard_chain(8);
  auto eh = extract_end_homogeneous(kParity, chain);
  REQUIRE(eh.subsequence.size() == 5);
  CHECK(eh.subsequence[0] == chain[0]);
  CHECK(eh.subsequence[1] == chain[1]);
  CHECK(eh.subsequence[2] == chain[3]);
  CHECK(eh.subsequence[3] == chain[5]);
  CHECK(eh.subsequence[4] == chain[7]);
  CHECK(eh.end_colors == std::vector<Color>{2, 1, 1, 1});
  CHECK(eh.verify(kParity).empty());

  auto hom = extract_homogeneous(kParity, eh);
  CHECK(hom.color == 1);
  REQUIRE(hom.members.size() == 4);
  CHECK(hom.members[0] == chain[1]);
  CHECK(hom.members[1] == chain[3]);
  CHECK(hom.members[2] == chain[5]);
  CHECK(hom.members[3] == chain[7]);
  CHECK(hom.verify(kParity).empty());

  // the exhaustive oracle confirms 4 is the best possible on this chain
  auto brute = brute_max_homogeneous(kParity, chain);
  CHECK(brute.size == hom.members.size());
}

TEST_CASE("extraction edge cases") {
  auto single = extract_end_homogeneous(kParity, standard_chain(1));
  CHECK(single.subsequence.size() == 1);
  CHECK(single.end_colors.empty());
  auto hom = extract_homogeneous(kParity, single);
  CHECK(hom.members.size() == 1);
  CHECK(hom.color == 1);  // tie rule

  auto full = extract_end_homogeneous(kConst1, standard_chain(9));
  CHECK(full.subsequence.size() == 9);
  for (Color c : full.end_colors) CHECK(c == 1);

  auto empty = extract_end_homogeneous(kParity, Chain{});
  CHECK(empty.subsequence.size() == 0);
}

TEST_CASE("corrupt certificate is rejected") {
  auto eh = extract_end_homogeneous(kParity, standard_chain(6));
  REQUIRE(eh.end_colors.size() >= 1);
  eh.end_colors[0] = eh.end_colors[0] == 1 ? 2 : 1;
  CHECK_FALSE(eh.verify(kParity).empty());
  CHECK_THROWS_AS(extract_homogeneous(kParity, eh), Error);
}

TEST_CASE("extraction size bound, every rule, N up to 64, k in {2,3}") {
  for (Rule rule : {Rule::Const1, Rule::Parity, Rule::TopSize, Rule::MaxGap}) {
    for (int k : {2, 3}) {
      PairColoring F = PairColoring::from_rule(rule, k);
      for (std::size_t n = 1; n <= 64; ++n) {
        auto eh = extract_end_homogeneous(F, standard_chain(n));
        CHECK(eh.subsequence.size() >= eh_lower_bound(n, k));
        CHECK(eh.verify(F).empty());
      }
    }
  }
}

TEST_CASE("homogeneous size bound") {
  for (Rule rule : {Rule::Const1, Rule::Parity, Rule::TopSize, Rule::MaxGap}) {
    PairColoring F = PairColoring::from_rule(rule);
    for (std::size_t n = 1; n <= 32; ++n) {
      auto eh = extract_end_homogeneous(F, standard_chain(n));
      auto hom = extract_homogeneous(F, eh);
      std::size_t len = eh.subsequence.size();
      REQUIRE(len >= 1);
      std::size_t bound = (len - 1 + 1) / 2 + 1;  // ceil((len-1)/k) + 1 with k = 2
      CHECK(hom.members.size() >= bound);
    }
  }
}

TEST_CASE("brute-force oracle") {
  auto l4 = brute_max_homogeneous(kParity, standard_chain(4));
  CHECK(l4.size == 2);
  REQUIRE(l4.witness.size() == 2);
  CHECK(l4.witness[0] == FinSet{0});
  CHECK(l4.witness[1] == FinSet{0, 1, 2});  // {c0, c2}
  CHECK(l4.color == 1);

  CHECK(brute_max_homogeneous(kConst1, standard_chain(5)).size == 5);

  // length-8 value frozen after the first oracle run
  auto l8 = brute_max_homogeneous(kParity, standard_chain(8));
  CHECK(l8.size == 4);
  CHECK(l8.witness == std::vector<FinSet>{FinSet{0}, FinSet{0, 1, 2}, FinSet{0, 1, 2, 3, 4},
                                          FinSet{0, 1, 2, 3, 4, 5, 6}});

  CHECK_THROWS_AS(brute_max_homogeneous(kParity, standard_chain(21)), Error);
}

TEST_CASE("greedy never beats the oracle, chains up to 14") {
  for (Rule rule : {Rule::Const1, Rule::Parity, Rule::TopSize, Rule::MaxGap}) {
    PairColoring F = PairColoring::from_rule(rule);
    for (std::size_t n = 1; n <= 14; ++n) {
      Chain chain = standard_chain(n);
      auto hom = extract_homogeneous(F, extract_end_homogeneous(F, chain));
      auto brute = brute_max_homogeneous(F, chain);
      CHECK(hom.members.size() <= brute.size);
      CHECK(hom.verify(F).empty());
    }
  }
}

TEST_CASE("countable-case construction") {
  SUBCASE("const1 keeps everything") {
    auto result = countable_cofinal_homogeneous(kConst1, 5);
    CHECK(result.certificate.members.size() == 5);
    CHECK(result.certificate.color == 1);
    CHECK(result.coverage == 5);
  }
  SUBCASE("parity n=8, dominance confirmed by subset scan") {
    auto result = countable_cofinal_homogeneous(kParity, 8);
    REQUIRE(result.certificate.members.size() == 4);
    CHECK(result.certificate.color == 1);
    // frozen after the scan below first confirmed it
    CHECK(result.coverage == 8);

    const auto& H = result.certificate.members;
    // exhaustive: every subset of {0..coverage-1} has a superset in H
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << result.coverage); ++mask) {
      FinSet x = FinSet::from_mask(mask);
      bool dominated = false;
      for (const FinSet& h : H) dominated = dominated || x.subset_of(h);
      CHECK(dominated);
    }
    // and coverage+1 fails
    FinSet beyond{static_cast<Label>(result.coverage)};
    bool dominated = false;
    for (const FinSet& h : H) dominated = dominated || beyond.subset_of(h);
    CHECK_FALSE(dominated);

    // the post's lower bound: coverage at least the size of the second member
    CHECK(result.coverage >= H[1].size());
  }
  SUBCASE("single step") {
    auto result = countable_cofinal_homogeneous(kParity, 1);
    CHECK(result.certificate.members.size() == 1);
    CHECK(result.coverage >= 1);
  }
  SUBCASE("custom ground enumeration") {
    std::vector<Label> ground = {5, 3, 8, 1, 9};
    auto result = countable_cofinal_homogeneous(
        kConst1, [&](std::size_t i) { return ground[i]; }, 5);
    CHECK(result.certificate.members.size() == 5);
    CHECK(result.coverage == 5);
    CHECK(result.chain[0] == FinSet{5});
    CHECK(result.chain[1] == FinSet{3, 5});
  }
  SUBCASE("repeating stream is rejected") {
    CHECK_THROWS_AS(countable_cofinal_homogeneous(kConst1, [](std::size_t) { return Label{7}; }, 3),
                    Error);
  }
}
