#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "oracles.hpp"

#include "cubecomb/bending.hpp"

using namespace cubecomb;

namespace {

int by_id(const std::vector<Hyperplane>& ws, const std::string& id) {
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i].id == id) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

/// Independent brute-force count of crooked subtrees from the graph data:
/// subsets of pieces where every incident switch owns exactly two chosen
/// slots and the induced piece-switch graph is a tree.
long crooked_count_oracle(const SwitchGraph& G) {
  const int P = static_cast<int>(G.pieces.size());
  REQUIRE(P < 20);
  long count = 0;
  for (long mask = 1; mask < (1L << P); ++mask) {
    std::vector<int> sw;
    bool ok = true;
    for (size_t s = 0; s < G.slots.size() && ok; ++s) {
      int hit = 0;
      for (int p : G.slots[s])
        if (mask & (1L << p)) ++hit;
      if (hit == 2) sw.push_back(static_cast<int>(s));
      else if (hit != 0) ok = false;
    }
    if (!ok || sw.empty()) continue;
    // Every chosen piece must touch a chosen switch (star-completeness is
    // already enforced by the 0-or-2 rule), and the graph must be a tree.
    std::vector<int> nodes;
    for (int p = 0; p < P; ++p)
      if (mask & (1L << p)) nodes.push_back(p);
    std::map<int, int> id;
    for (int p : nodes) id[p] = static_cast<int>(id.size());
    int n = static_cast<int>(nodes.size() + sw.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int edges = 0;
    bool acyclic = true;
    for (size_t k = 0; k < sw.size(); ++k) {
      for (int p : G.slots[sw[k]]) {
        if (!(mask & (1L << p))) continue;
        int a = find(static_cast<int>(nodes.size() + k)), b = find(id[p]);
        if (a == b) acyclic = false;
        parent[a] = b;
        ++edges;
      }
    }
    if (acyclic && edges == n - 1) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("switch system validation") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), v1 = by_id(ws, "00|01"), v2 = by_id(ws, "01|02");

  auto S = validate_switch_system(g, ws, {{h2, v2}}, 1);
  CHECK(S.switches.size() == 1);
  CHECK(S.delta_doubled == 6);
  CHECK(!S.forest_guaranteed);  // 1 <= 8*delta

  auto empty = validate_switch_system(g, ws, {}, 3);
  CHECK(empty.switches.empty());

  try {
    (void)validate_switch_system(g, ws, {{h2, v1}, {h2, v2}}, 2);
    FAIL("expected SpacingViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpacingViolated);  // d(v1, v2) = 1 < 2
  }
  try {
    (void)validate_switch_system(g, ws, {{v1, v2}}, 1);
    FAIL("expected NotTransverse");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTransverse);
  }
}

TEST_CASE("switch graph of the single-switch grid is a star") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  auto S = validate_switch_system(
      g, ws, {{by_id(ws, "10|20"), by_id(ws, "01|02")}}, 1);
  auto G = switch_graph(g, ws, S);
  REQUIRE(G.pieces.size() == 4);
  for (const auto& p : G.pieces) CHECK(p.dual_edge_ids.size() == 2);
  REQUIRE(G.slots.size() == 1);
  std::set<int> slots(G.slots[0].begin(), G.slots[0].end());
  CHECK(slots.size() == 4);
  CHECK(G.forest);

  auto none = switch_graph(g, ws, validate_switch_system(g, ws, {}, 1));
  CHECK(none.pieces.empty());
  CHECK(none.forest);
}

TEST_CASE("pieces partition the dual edges") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), h3 = by_id(ws, "20|30"), v2 = by_id(ws, "01|02");
  auto S = validate_switch_system(g, ws, {{h2, v2}, {v2, h3}}, 1);
  auto G = switch_graph(g, ws, S);
  // v2 splits into three pieces, h2 and h3 into two each.
  CHECK(G.pieces.size() == 7);
  std::map<int, std::set<int>> covered;
  for (const auto& p : G.pieces)
    for (int e : p.dual_edge_ids) CHECK(covered[p.hyperplane].insert(e).second);
  for (auto& [w, edges] : covered)
    CHECK(edges.size() == ws[w].dual_edges.size());
  CHECK(G.forest);  // the shared middle piece makes a path, not a cycle
}

TEST_CASE("crooked subtree enumeration") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), h3 = by_id(ws, "20|30"), v2 = by_id(ws, "01|02");

  auto star = switch_graph(g, ws, validate_switch_system(g, ws, {{h2, v2}}, 1));
  auto E = enumerate_crooked(star, 100);
  CHECK(E.subtrees.size() == 6);  // choose 2 of the 4 star slots
  CHECK(!E.limit_exceeded);
  CHECK(E.subtrees.size() == static_cast<size_t>(crooked_count_oracle(star)));

  auto limited = enumerate_crooked(star, 3);
  CHECK(limited.subtrees.size() == 3);
  CHECK(limited.limit_exceeded);
  // The partial list is a prefix of the full canonical order.
  for (int i = 0; i < 3; ++i)
    CHECK(limited.subtrees[i].pieces == E.subtrees[i].pieces);

  auto two = switch_graph(
      g, ws, validate_switch_system(g, ws, {{h2, v2}, {v2, h3}}, 1));
  auto E2 = enumerate_crooked(two, 1000);
  CHECK(E2.subtrees.size() == static_cast<size_t>(crooked_count_oracle(two)));

  auto none = switch_graph(g, ws, validate_switch_system(g, ws, {}, 1));
  CHECK(enumerate_crooked(none, 10).subtrees.empty());
}

TEST_CASE("realizing crooked walls on the grid") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), v2 = by_id(ws, "01|02");
  auto G = switch_graph(g, ws, validate_switch_system(g, ws, {{h2, v2}}, 1));
  auto E = enumerate_crooked(G, 100);
  REQUIRE(E.subtrees.size() == 6);

  int l_shapes = 0, straights = 0;
  for (const auto& tree : E.subtrees) {
    auto R = realize(g, ws, G, tree);  // throws if not two-sided
    CHECK(R.side_a.size() + R.side_b.size() == 16);
    std::set<int> hyps;
    for (int p : tree.pieces) hyps.insert(G.pieces[p].hyperplane);
    if (hyps.size() == 1) {
      ++straights;
      // A straight pair reassembles the original hyperplane wall.
      const auto& w = ws[*hyps.begin()];
      CHECK((R.side_a == w.plus || R.side_a == w.minus));
      CHECK(R.quasiconvexity_defect == 0);
    } else {
      ++l_shapes;
      CHECK(R.track.size() == 4);
    }
    // Component oracle agrees.
    std::set<std::pair<int, int>> track(R.track.begin(), R.track.end());
    CHECK(oracle::component_count(g.size(), g.edges(), track) == 2);
  }
  CHECK(straights == 2);
  CHECK(l_shapes == 4);
}

TEST_CASE("crooked walls on the 3-cube") {
  auto c = corpus::cube3();
  auto ws = hyperplanes(c);
  auto G = switch_graph(c, ws, validate_switch_system(c, ws, {{0, 1}}, 1));
  auto E = enumerate_crooked(G, 100);
  REQUIRE(E.subtrees.size() == 6);
  for (const auto& tree : E.subtrees) {
    std::set<int> hyps;
    for (int p : tree.pieces) hyps.insert(G.pieces[p].hyperplane);
    auto R = realize(c, ws, G, tree);
    if (hyps.size() == 1) {
      CHECK(R.side_a.size() == 4);  // a straight pair is the original wall
    } else {
      // An L-shaped track pinches off one edge of the cube.
      CHECK(std::min(R.side_a.size(), R.side_b.size()) == 2);
    }
  }
}

TEST_CASE("a partial piece set does not separate") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), v2 = by_id(ws, "01|02");
  auto G = switch_graph(g, ws, validate_switch_system(g, ws, {{h2, v2}}, 1));
  // Half a hyperplane with the switch omitted leaves the grid connected.
  CrookedSubtree half;
  half.pieces = {0};
  try {
    (void)realize(g, ws, G, half);
    FAIL("expected NotSeparating");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSeparating);
  }
}

TEST_CASE("recubulation") {
  auto g = corpus::grid(3, 3);
  auto ws = hyperplanes(g);
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      walls;
  for (const auto& w : ws) {
    std::vector<std::string> plus, minus;
    for (int v : w.plus) plus.push_back(g.name(v));
    for (int v : w.minus) minus.push_back(g.name(v));
    walls.emplace_back(plus, minus);
  }
  auto R = recubulate(g, walls);
  CHECK(complexes_isomorphic(g, R.dual.complex).has_value());

  // A single wall dualizes to a single edge.
  auto one = recubulate(g, {walls[0]});
  CHECK(one.dual.complex.size() == 2);
}

TEST_CASE("standard paths") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int h2 = by_id(ws, "10|20"), v2 = by_id(ws, "01|02");
  int v1 = by_id(ws, "00|01"), v3 = by_id(ws, "02|03");

  SUBCASE("single hyperplane, trivial path") {
    int x = g.index("01");
    auto R = standard_path(g, ws, {v2}, x, x);
    CHECK(R.m == 0);
    CHECK(R.path.front() == R.path.back());
    CHECK(R.segments_geodesic);
  }
  SUBCASE("two transverse hyperplanes") {
    auto R = standard_path(g, ws, {v2, h2}, g.index("01"), g.index("23"));
    CHECK(R.m == 1);
    CHECK(R.segments_geodesic);
    CHECK(R.k >= 0);
    // The path is a genuine walk through the subdivision.
    for (size_t i = 0; i + 1 < R.path.size(); ++i)
      CHECK(R.subdivided.adjacent(R.path[i], R.path[i + 1]));
  }
  SUBCASE("three hyperplanes report the spacing bound") {
    auto R = standard_path(g, ws, {v1, h2, v3}, g.index("00"), g.index("13"));
    CHECK(R.m == 2);
    CHECK(R.n_min == 2);  // d(v1, v3)
    CHECK(!R.hypotheses_hold);  // the grid is far from 8*delta-spaced
    CHECK(R.segments_geodesic);
  }
  SUBCASE("errors") {
    try {
      (void)standard_path(g, ws, {v1, v2}, g.index("00"), g.index("02"));
      FAIL("expected NotTransverseConsecutive");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotTransverseConsecutive);
    }
    try {
      (void)standard_path(g, ws, {v2, h2}, g.index("30"), g.index("23"));
      FAIL("expected NotOnCarrier");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotOnCarrier);
    }
  }
}

TEST_CASE("minimal projection hyperplane") {
  // Tree geodesics project to single midcubes everywhere.
  auto t = corpus::spider(5, 2);
  auto wt = hyperplanes(t);
  auto pathv = geodesic(t, t.index("l0_2"), t.index("l1_2"));
  auto R = min_projection_hyperplane(t, wt, pathv);
  CHECK(R.diameter == 0);
  for (const auto& [id, diam] : R.all) CHECK(diam == 0);

  auto g = corpus::grid(4, 4);
  auto wg = hyperplanes(g);
  SUBCASE("straight row geodesic") {
    std::vector<int> row{g.index("00"), g.index("01"), g.index("02"),
                         g.index("03")};
    auto S = min_projection_hyperplane(g, wg, row);
    CHECK(S.all.size() == 3);
    for (const auto& [id, diam] : S.all) CHECK(diam == 0);
  }
  SUBCASE("staircase geodesic") {
    std::vector<int> stairs{g.index("00"), g.index("01"), g.index("11"),
                            g.index("12"), g.index("22"), g.index("23"),
                            g.index("33")};
    auto S = min_projection_hyperplane(g, wg, stairs);
    CHECK(S.all.size() == 6);
    // Every crossed hyperplane sees at least the one-square staircase bend.
    CHECK(S.diameter >= 2);
    for (const auto& [id, diam] : S.all) CHECK(diam >= S.diameter);
    // Canonical tie-break: the reported id is the first among minimizers.
    for (const auto& [id, diam] : S.all)
      if (diam == S.diameter) {
        CHECK(id == S.id);
        break;
      }
  }
  SUBCASE("non-geodesic is rejected") {
    std::vector<int> back{g.index("00"), g.index("01"), g.index("00")};
    try {
      (void)min_projection_hyperplane(g, wg, back);
      FAIL("expected NotGeodesic");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotGeodesic);
    }
  }
}

TEST_CASE("forest condition on spaced systems") {
  // Trees have delta 0, so any positive spacing guarantees a forest.
  auto s = corpus::spider(5, 2);
  auto ws = hyperplanes(s);
  CHECK(hyperbolicity_delta_doubled(s) == 0);
  // No transverse pairs exist in a tree, so only the empty system is valid;
  // its graph is trivially a forest.
  auto S = validate_switch_system(s, ws, {}, 1);
  CHECK(S.forest_guaranteed);
  CHECK(switch_graph(s, ws, S).forest);

  // The documented non-forest instance: a four-switch cycle on the 3x3
  // grid, necessarily with n <= 8*delta.
  auto g = corpus::grid(3, 3);
  auto wg = hyperplanes(g);
  int h1 = -1, h2 = -1, v1 = -1, v2 = -1;
  for (size_t i = 0; i < wg.size(); ++i) {
    if (wg[i].id == "00|10") h1 = static_cast<int>(i);
    if (wg[i].id == "10|20") h2 = static_cast<int>(i);
    if (wg[i].id == "00|01") v1 = static_cast<int>(i);
    if (wg[i].id == "01|02") v2 = static_cast<int>(i);
  }
  auto S2 = validate_switch_system(
      g, wg, {{h1, v1}, {v1, h2}, {h2, v2}, {v2, h1}}, 1);
  CHECK(!S2.forest_guaranteed);  // n = 1 <= 8*delta
  auto G2 = switch_graph(g, wg, S2);
  CHECK(!G2.forest);
}
