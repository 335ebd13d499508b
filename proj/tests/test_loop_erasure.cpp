// Chronological loop erasure: replay states, skeleton, erased sections,
// cycle records. Golden values are frozen from hand simulation; the
// randomized cross-check rebuilds the section set with an independent
// reachability construction.

#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "walkalg/generate.hpp"
#include "walkalg/loop_erasure.hpp"
#include "walkalg/text_io.hpp"
#include "walkalg/walk.hpp"

using namespace walkalg;

namespace {

Walk w(const std::string& text) { return parse_walk(text); }

// Independent reconstruction of the erased-section set. A fresh stack
// replay yields one primitive section per removed cycle (closing index
// paired with the latest earlier index carrying the same vertex, erased
// occurrences included); sections chained end to end compose, so the full
// set is the reachability closure of the primitive sections viewed as
// arcs between step indices.
struct ErasureOracle {
  std::vector<std::pair<std::size_t, std::size_t>> primitive;
  std::vector<std::size_t> survivors;  // final state, original indices

  explicit ErasureOracle(const Walk& walk) {
    std::vector<std::size_t> state{0};
    for (std::size_t j = 1; j < walk.num_vertices(); ++j) {
      auto hit = std::find_if(state.begin(), state.end(), [&](std::size_t i) {
        return walk[i] == walk[j];
      });
      if (hit == state.end()) {
        state.push_back(j);
        continue;
      }
      std::size_t last = j;
      for (std::size_t i = j; i-- > 0;)
        if (walk[i] == walk[j]) {
          last = i;
          break;
        }
      primitive.push_back({last, j});
      state.erase(hit + 1, state.end());
    }
    survivors = state;
  }

  std::set<std::pair<std::size_t, std::size_t>> sections() const {
    std::map<std::size_t, std::vector<std::size_t>> into;  // end -> starts
    for (auto [k, j] : primitive) into[j].push_back(k);
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (auto [k, j] : primitive) {
      // Walk backwards through sections ending where earlier ones start.
      std::vector<std::size_t> agenda{k};
      out.insert({k, j});
      while (!agenda.empty()) {
        std::size_t end = agenda.back();
        agenda.pop_back();
        auto it = into.find(end);
        if (it == into.end()) continue;
        for (std::size_t start : it->second)
          if (out.insert({start, j}).second) agenda.push_back(start);
      }
    }
    return out;
  }
};

std::set<std::pair<std::size_t, std::size_t>> as_pairs(
    const std::vector<Cut>& cuts) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const Cut& c : cuts) out.insert({c.from, c.to});
  return out;
}

std::vector<Cut> cuts(std::initializer_list<std::pair<std::size_t, std::size_t>>
                          pairs) {
  std::vector<Cut> out;
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("erasure states along 12324522") {
  Walk a = w("12324522");
  CHECK(lew(a, 0) == w("1"));
  CHECK(lew(a, 2) == w("123"));
  CHECK(lew(a, 3) == w("12"));   // cycle 232 removed on arrival
  CHECK(lew(a, 5) == w("1245"));
  CHECK(lew(a, 6) == w("12"));   // cycle 2452 removed
  CHECK(lew(a, 7) == w("12"));   // self-loop 22 removed
  CHECK(lew(a, a.degree()) == skeleton(a));
  CHECK_THROWS_AS((void)lew(a, 8), std::out_of_range);
}

TEST_CASE("skeleton goldens") {
  CHECK(skeleton(w("12324522")) == w("12"));
  CHECK(skeleton(w("34555444678879")) == w("34679"));
  CHECK(skeleton(w("12345")) == w("12345"));
  CHECK(skeleton(Walk::trivial(4)) == Walk::trivial(4));
  // Closed walks collapse to their starting vertex.
  CHECK(skeleton(w("1232341")) == Walk::trivial(1));
  CHECK(skeleton(w("111")) == Walk::trivial(1));
  CHECK(skeleton(w("123451")) == Walk::trivial(1));
}

TEST_CASE("loop-erased sections of 12324522") {
  // Six sections: 232, 2452, 22 as single cycles, plus 232452, 24522,
  // 2324522 as chains of consecutive cycles.
  CHECK(as_pairs(les(w("12324522"))) ==
        ErasureOracle(w("12324522")).sections());
  CHECK(les(w("12324522")) ==
        cuts({{1, 3}, {1, 6}, {1, 7}, {3, 6}, {3, 7}, {6, 7}}));
}

TEST_CASE("loop-erased section goldens") {
  CHECK(les(w("1232341")) == cuts({{0, 6}, {1, 3}}));
  CHECK(les(w("111")) == cuts({{0, 1}, {0, 2}, {1, 2}}));
  CHECK(les(w("12345")).empty());
  CHECK(les(Walk::trivial(2)).empty());
  CHECK(les(w("34555444678879")) ==
        cuts({{1, 5},
              {1, 6},
              {1, 7},
              {2, 3},
              {2, 4},
              {3, 4},
              {5, 6},
              {5, 7},
              {6, 7},
              {9, 12},
              {10, 11}}));
  // Chains may interleave when they share a base vertex: (0,3) and (2,6)
  // below both open and close at vertex 1 and strictly straddle.
  CHECK(les(w("1211321")) ==
        cuts({{0, 2}, {0, 3}, {0, 6}, {2, 3}, {2, 6}, {3, 6}}));
  CHECK(les(w("222123211")) == cuts({{0, 1},
                                     {0, 2},
                                     {0, 4},
                                     {0, 6},
                                     {1, 2},
                                     {1, 4},
                                     {1, 6},
                                     {2, 4},
                                     {2, 6},
                                     {4, 6},
                                     {7, 8}}));
}

TEST_CASE("section membership") {
  Walk a = w("12324522");
  CHECK(is_les_section(a, {1, 3}));
  CHECK(is_les_section(a, {3, 7}));
  CHECK_FALSE(is_les_section(a, {0, 3}));  // not closed
  CHECK_FALSE(is_les_section(a, {1, 4}));  // closed pairs only
  CHECK_FALSE(is_les_section(a, {2, 2}));
  // Straddling same-vertex chains are genuine sections.
  CHECK(is_les_section(w("1211321"), {0, 3}));
  CHECK(is_les_section(w("1211321"), {2, 6}));
  // Closed, every interior step erased, but the erased cycles inside do
  // not chain end to end; not a section.
  CHECK_FALSE(is_les_section(w("1231231"), {1, 4}));
}

TEST_CASE("replay records for 12324522") {
  auto replay = replay_cycles(w("12324522"));
  REQUIRE(replay.size() == 3);

  CHECK(replay[0].section == Cut{1, 3});
  CHECK(replay[0].members == std::vector<std::size_t>{1, 2, 3});
  CHECK(replay[0].erased == std::vector<std::size_t>{2, 3});
  CHECK(replay[0].root_index() == 1);
  CHECK(replay[0].close_index() == 3);

  CHECK(replay[1].section == Cut{3, 6});
  CHECK(replay[1].members == std::vector<std::size_t>{1, 4, 5, 6});
  CHECK(replay[1].erased == std::vector<std::size_t>{4, 5, 6});

  CHECK(replay[2].section == Cut{6, 7});
  CHECK(replay[2].members == std::vector<std::size_t>{1, 7});
  CHECK(replay[2].erased == std::vector<std::size_t>{7});

  CHECK(erased_cycles(w("12324522")) == cuts({{1, 3}, {3, 6}, {6, 7}}));
}

TEST_CASE("erased interiors partition the non-surviving indices") {
  GenConfig cfg;
  cfg.count = 300;
  cfg.vertex_count = 4;
  cfg.max_length = 10;
  cfg.seed = 11;
  for (const Walk& walk : gen_walks(cfg)) {
    ErasureOracle oracle(walk);
    std::set<std::size_t> erased;
    for (const ErasedCycle& cycle : replay_cycles(walk)) {
      // The cycle readout along the members is closed and self-avoiding
      // up to the repeated endpoint.
      CHECK(walk[cycle.root_index()] == walk[cycle.close_index()]);
      std::set<VertexId> seen;
      for (std::size_t i = 0; i + 1 < cycle.members.size(); ++i)
        CHECK(seen.insert(walk[cycle.members[i]]).second);
      for (std::size_t i : cycle.erased) CHECK(erased.insert(i).second);
    }
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < walk.num_vertices(); ++i)
      if (!erased.count(i)) alive.push_back(i);
    CHECK(alive == oracle.survivors);
    // Reading off the survivors reproduces the skeleton.
    Walk s = skeleton(walk);
    REQUIRE(alive.size() == s.num_vertices());
    for (std::size_t i = 0; i < alive.size(); ++i)
      CHECK(walk[alive[i]] == s[i]);
  }
}

TEST_CASE("section set matches the reachability oracle on random walks") {
  GenConfig cfg;
  cfg.count = 2000;
  cfg.vertex_count = 4;
  cfg.max_length = 10;
  cfg.seed = 5;
  for (const Walk& walk : gen_walks(cfg)) {
    auto sections = les(walk);
    CHECK(std::is_sorted(sections.begin(), sections.end()));
    CHECK(as_pairs(sections) == ErasureOracle(walk).sections());
    // Necessary shape of every section: closed, and nothing strictly
    // inside it survives to the skeleton.
    ErasureOracle oracle(walk);
    std::set<std::size_t> survivors(oracle.survivors.begin(),
                                    oracle.survivors.end());
    for (const Cut& c : sections) {
      CHECK(walk[c.from] == walk[c.to]);
      for (std::size_t i = c.from + 1; i <= c.to; ++i)
        CHECK_FALSE(survivors.count(i));
      CHECK(is_les_section(walk, c));
    }
  }
}
