#include <doctest.h>

#include "cofinal/laver.hpp"

using namespace cofinal;

namespace {

// the worked four-element instance: a_3 = {0}, H_3 = {{1},{2}}, H_2 empty
LaverRegistry small_registry() {
  LaverRegistry registry;
  registry.ground_size = 4;
  registry.a[3] = FinSet{0};
  registry.mh[3] = {FinSet{1, 2}, {FinSet{1}, FinSet{2}}};
  registry.mh[2] = {FinSet{}, {}};
  return registry;
}

}  // namespace

TEST_CASE("four-element worked example") {
  LaverState state = laver_build(small_registry());

  CHECK(state.built.at(0) == FinSet{0});
  CHECK(state.built.at(1) == FinSet{1});
  CHECK(state.built.at(2) == FinSet{2});
  CHECK(state.built.at(3) == FinSet{0, 1, 2, 3});

  REQUIRE(state.constraints.size() == 2);
  CHECK(state.constraints.at({FinSet{1}, FinSet{0, 1, 2, 3}}) == 1);
  CHECK(state.constraints.at({FinSet{2}, FinSet{0, 1, 2, 3}}) == 2);

  // the walk of s_3 visits 3 (choice fires), then 2 (H_2 empty), then 1, 0
  const auto& walk = state.choice_log.at(3);
  REQUIRE(walk.size() == 4);
  CHECK(walk[0].position == 3);
  CHECK(walk[0].success);
  CHECK(walk[0].c == FinSet{1});
  CHECK(walk[0].d == FinSet{2});
  CHECK(walk[1].position == 2);
  CHECK_FALSE(walk[1].success);
  CHECK_FALSE(walk[2].success);
  CHECK_FALSE(walk[3].success);
}

TEST_CASE("degenerate registries") {
  SUBCASE("no families: s_alpha = a_alpha cup {alpha}") {
    LaverRegistry registry;
    registry.ground_size = 4;
    registry.a[2] = FinSet{0, 1};
    LaverState state = laver_build(registry);
    CHECK(state.built.at(2) == FinSet{0, 1, 2});
    CHECK(state.constraints.empty());
  }
  SUBCASE("empty a and mh: all singletons") {
    LaverRegistry registry;
    registry.ground_size = 5;
    LaverState state = laver_build(registry);
    for (Label alpha = 0; alpha < 5; ++alpha) {
      CHECK(state.built.at(alpha) == FinSet{alpha});
    }
  }
}

TEST_CASE("registry validation") {
  LaverRegistry registry;
  registry.ground_size = 3;
  registry.a[1] = FinSet{2};  // not inside {0}
  CHECK_THROWS_AS(laver_build(registry), Error);

  LaverRegistry bad_m;
  bad_m.ground_size = 3;
  bad_m.mh[1] = {FinSet{1}, {}};  // M_1 must live below 1
  CHECK_THROWS_AS(laver_build(bad_m), Error);

  LaverRegistry bad_h;
  bad_h.ground_size = 3;
  bad_h.mh[2] = {FinSet{0}, {FinSet{1}}};  // H member outside M
  CHECK_THROWS_AS(laver_build(bad_h), Error);
}

TEST_CASE("completion") {
  LaverState state = laver_build(small_registry());
  PairColoring F = laver_complete(state, 1);
  FinSet s3{0, 1, 2, 3};
  CHECK(F.eval(FinSet{1}, s3) == 1);
  CHECK(F.eval(FinSet{2}, s3) == 2);
  CHECK(F.eval(FinSet{}, FinSet{0, 3}) == 1);  // unconstrained: default

  PairColoring F2 = laver_complete(state, 2);
  CHECK(F2.eval(FinSet{}, FinSet{0, 3}) == 2);

  SUBCASE("empty constraints give a constant coloring") {
    LaverRegistry registry;
    registry.ground_size = 2;
    PairColoring constant = laver_complete(laver_build(registry), 2);
    CHECK(constant.eval(FinSet{0}, FinSet{0, 1}) == 2);
  }
  SUBCASE("corrupted constraint map is rejected") {
    LaverState broken = state;
    broken.constraints[{FinSet{1}, FinSet{0, 1, 2, 3}}] = 2;
    CHECK_THROWS_AS(laver_complete(broken, 1), Error);
  }
  SUBCASE("conflicting injected constraints are rejected") {
    std::map<std::pair<FinSet, FinSet>, Color> entries;
    entries[{FinSet{0}, FinSet{0, 1}}] = 1;
    CHECK_NOTHROW(PairColoring::from_constraints(2, entries, 1));
    // the same pair cannot be driven to two colors through the json loader;
    // the map type dedupes, so inject through laver state corruption instead
    LaverState broken = state;
    broken.choice_log.at(3)[0].d = FinSet{1};  // d collides with c
    CHECK_THROWS_AS(laver_complete(broken, 1), Error);
  }
}

TEST_CASE("witness extraction") {
  LaverState state = laver_build(small_registry());
  PairColoring F = laver_complete(state, 1);

  auto witnesses = laver_verify(state, F, 3);
  REQUIRE(witnesses.size() == 1);
  CHECK(witnesses[0].beta == 3);
  CHECK(witnesses[0].s == FinSet{0, 1, 2, 3});
  CHECK(witnesses[0].c == FinSet{1});
  CHECK(witnesses[0].d == FinSet{2});

  CHECK(laver_verify(state, F, 2).empty());  // H_2 empty: no choice ever fired
  CHECK_THROWS_AS(laver_verify(state, F, 1), Error);  // unregistered
}

TEST_CASE("invariants on a denser instance") {
  // every subset of {0..5} registered as (M, all subsets of M), assigned to
  // the ordinals in (size,lex) order
  LaverRegistry registry;
  registry.ground_size = 24;
  std::vector<FinSet> Ms;
  for_each_subset_size_lex(FinSet{0, 1, 2, 3, 4, 5}.labels(), [&](const FinSet& M) {
    Ms.push_back(M);
    return true;
  });
  for (Label alpha = 0; alpha < 24; ++alpha) {
    const FinSet& M = Ms[alpha];
    std::vector<FinSet> H;
    for_each_subset_size_lex(M.labels(), [&](const FinSet& h) {
      H.push_back(h);
      return true;
    });
    registry.mh[alpha] = {M, std::move(H)};
  }
  LaverState state = laver_build(registry);
  PairColoring F = laver_complete(state, 1);

  for (const auto& [alpha, s] : state.built) {
    CHECK(s.max() == alpha);
    const auto& walk = state.choice_log.at(alpha);
    // positions strictly decrease and cover exactly the elements of s
    std::vector<Label> positions;
    for (const auto& record : walk) positions.push_back(record.position);
    for (std::size_t i = 1; i < positions.size(); ++i) CHECK(positions[i - 1] > positions[i]);
    FinSet visited = FinSet::canonicalize(positions);
    CHECK(visited == s);

    // richness: two fresh members available implies the choice fired
    std::size_t used = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      auto entry = registry.mh.find(walk[i].position);
      std::size_t family = entry == registry.mh.end() ? 0 : entry->second.H.size();
      if (family >= used + 2) CHECK(walk[i].success);
      if (family >= 2 * (i + 1)) CHECK(walk[i].success);
      if (walk[i].success) used += 2;
    }
  }

  // every successful choice re-verifies through the completed coloring
  for (const auto& [alpha, walk] : state.choice_log) {
    for (const auto& record : walk) {
      if (!record.success) continue;
      const FinSet& s = state.built.at(alpha);
      CHECK(F.eval(record.c, s) == 1);
      CHECK(F.eval(record.d, s) == 2);
    }
  }
}
