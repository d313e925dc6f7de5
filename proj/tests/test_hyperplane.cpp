#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "corpus.hpp"
#include "oracles.hpp"

#include "cubecomb/hyperplane.hpp"
#include "cubecomb/pocset.hpp"

using namespace cubecomb;

TEST_CASE("hyperplane counts and the distance formula") {
  std::map<std::string, size_t> expected{
      {"P2", 1},     {"P3", 2},    {"P4", 3},     {"P5", 4},
      {"P6", 5},     {"square", 2}, {"cube3", 3}, {"grid4", 6},
      {"grid5", 8},  {"tripod", 3}, {"spider5", 10}};
  for (const auto& [name, X] : corpus::standard()) {
    CAPTURE(name);
    auto ws = hyperplanes(X);
    if (expected.count(name)) CHECK(ws.size() == expected[name]);
    // d(x, y) equals the number of separating hyperplanes.
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y) {
        int sep = 0;
        for (const auto& w : ws) {
          bool px = std::binary_search(w.plus.begin(), w.plus.end(), x);
          bool py = std::binary_search(w.plus.begin(), w.plus.end(), y);
          if (px != py) ++sep;
        }
        REQUIRE(sep == X.dist(x, y));
      }
    // Halfspaces partition the vertices; dual edge counts are consistent.
    for (const auto& w : ws) {
      REQUIRE(w.plus.size() + w.minus.size() == static_cast<size_t>(X.size()));
      REQUIRE(is_convex(X, w.plus));
      REQUIRE(is_convex(X, w.minus));
      REQUIRE(w.carrier_plus.size() == w.dual_edges.size());
    }
  }
}

TEST_CASE("separator_set matches point separation") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      CHECK(separator_set(g, ws, {x}, {y}).size() ==
            static_cast<size_t>(g.dist(x, y)));
}

TEST_CASE("transversality") {
  auto sq = corpus::square();
  auto wsq = hyperplanes(sq);
  REQUIRE(wsq.size() == 2);
  CHECK(is_transverse(sq, wsq[0], wsq[1]));

  auto p = corpus::path(4);
  auto wp = hyperplanes(p);
  for (size_t i = 0; i < wp.size(); ++i)
    for (size_t j = i + 1; j < wp.size(); ++j)
      CHECK(!is_transverse(p, wp[i], wp[j]));

  auto g = corpus::grid(4, 4);
  auto wg = hyperplanes(g);
  int transverse_pairs = 0;
  for (size_t i = 0; i < wg.size(); ++i)
    for (size_t j = i + 1; j < wg.size(); ++j)
      if (is_transverse(g, wg[i], wg[j])) ++transverse_pairs;
  CHECK(transverse_pairs == 9);  // each horizontal with each vertical
}

TEST_CASE("facing triples") {
  auto t = corpus::tripod();
  CHECK(facing_triples(t, hyperplanes(t)).size() == 1);
  auto s = corpus::spider(5, 2);
  // Three distinct legs, two hyperplanes each: C(5,3) * 2^3.
  CHECK(facing_triples(s, hyperplanes(s)).size() == 80);
  auto g = corpus::grid(4, 4);
  CHECK(facing_triples(g, hyperplanes(g)).empty());
  auto c = corpus::cube3();
  CHECK(facing_triples(c, hyperplanes(c)).empty());
}

TEST_CASE("longest chain") {
  auto p = corpus::path(6);
  CHECK(longest_chain(p, hyperplanes(p)).size() == 5);
  auto g = corpus::grid(4, 4);
  CHECK(longest_chain(g, hyperplanes(g)).size() == 3);
  auto c = corpus::cube3();
  CHECK(longest_chain(c, hyperplanes(c)).size() == 1);
  // Chain halfspaces are strictly nested, innermost first.
  auto ws = hyperplanes(p);
  auto chain = longest_chain(p, ws);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    bool nested =
        std::includes(ws[chain[i + 1]].plus.begin(), ws[chain[i + 1]].plus.end(),
                      ws[chain[i]].plus.begin(), ws[chain[i]].plus.end()) ||
        std::includes(ws[chain[i + 1]].minus.begin(),
                      ws[chain[i + 1]].minus.end(), ws[chain[i]].minus.begin(),
                      ws[chain[i]].minus.end()) ||
        std::includes(ws[chain[i + 1]].plus.begin(), ws[chain[i + 1]].plus.end(),
                      ws[chain[i]].minus.begin(), ws[chain[i]].minus.end()) ||
        std::includes(ws[chain[i + 1]].minus.begin(),
                      ws[chain[i + 1]].minus.end(), ws[chain[i]].plus.begin(),
                      ws[chain[i]].plus.end());
    CHECK(nested);
  }
}

TEST_CASE("hyperplane distance uses the midcube convention") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  auto by_id = [&](const std::string& id) -> const Hyperplane* {
    for (const auto& w : ws)
      if (w.id == id) return &w;
    REQUIRE(false);
    return nullptr;
  };
  // Vertical hyperplanes: between columns 0|1, 1|2, 2|3.
  const auto* v1 = by_id("00|01");
  const auto* v2 = by_id("01|02");
  const auto* v3 = by_id("02|03");
  const auto* h2 = by_id("10|20");
  CHECK(hyperplane_distance(g, *v1, *v2) == 1);
  CHECK(hyperplane_distance(g, *v1, *v3) == 2);
  CHECK(hyperplane_distance(g, *v1, *h2) == 0);  // transverse
}

TEST_CASE("halfspace pocset") {
  for (const auto& [name, X] : corpus::standard()) {
    CAPTURE(name);
    auto ws = hyperplanes(X);
    auto P = pocset_of(X, ws);
    CHECK(P.pair_count() == static_cast<int>(ws.size()));
    CHECK(P.dimension() == X.dimension());
    // Order is halfspace containment.
    for (const auto& a : ws)
      for (const auto& b : ws)
        for (bool sa : {true, false})
          for (bool sb : {true, false}) {
            bool inc = std::includes(b.halfspace(sb).begin(),
                                     b.halfspace(sb).end(),
                                     a.halfspace(sa).begin(),
                                     a.halfspace(sa).end());
            CHECK(P.leq(P.index(halfspace_label(a, sa)),
                        P.index(halfspace_label(b, sb))) == inc);
          }
  }
}

TEST_CASE("pocset validation") {
  CHECK_THROWS_AS(Pocset::build({"a", "b"}, {{"a", "a"}}, {}), Error);
  CHECK_THROWS_AS(Pocset::build({"a", "A", "b", "B"},
                                {{"a", "A"}, {"b", "B"}},
                                {{"a", "b"}, {"b", "a"}}),
                  Error);
  auto P = Pocset::build({"a", "A", "b", "B"}, {{"a", "A"}, {"b", "B"}},
                         {{"a", "b"}});
  CHECK(P.leq(P.index("a"), P.index("b")));
  CHECK(P.leq(P.index("B"), P.index("A")));  // mirrored through the star
  CHECK(!P.transverse(P.index("a"), P.index("b")));
  auto Q = Pocset::build({"a", "A", "b", "B"}, {{"a", "A"}, {"b", "B"}}, {});
  CHECK(Q.transverse(Q.index("a"), Q.index("b")));
  CHECK(Q.dimension() == 2);
}

TEST_CASE("corner search") {
  auto g = corpus::grid(4, 4);
  auto ws = hyperplanes(g);
  int v1 = -1, h1 = -1;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].id == "00|01") v1 = static_cast<int>(i);
    if (ws[i].id == "00|10") h1 = static_cast<int>(i);
  }
  REQUIRE(v1 >= 0);
  REQUIRE(h1 >= 0);
  CHECK_THROWS_AS((void)corner_halfspace(g, ws, v1, true, v1, false), Error);
  // Non-transverse pair is rejected.
  int v2 = -1;
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i].id == "01|02") v2 = static_cast<int>(i);
  CHECK_THROWS_AS((void)corner_halfspace(g, ws, v1, true, v2, false), Error);
  // A product complex has no halfspace inside any corner; the surrogate
  // hypotheses report why (the grid is reducible and not essential).
  bool v1_inner = std::binary_search(ws[v1].plus.begin(), ws[v1].plus.end(),
                                     g.index("03"));
  bool h1_inner = std::binary_search(ws[h1].plus.begin(), ws[h1].plus.end(),
                                     g.index("30"));
  auto G = corner_halfspace(g, ws, v1, v1_inner, h1, h1_inner);
  CHECK(!G.halfspace.has_value());
  CHECK(std::find(G.failed_hypotheses.begin(), G.failed_hypotheses.end(),
                  "irreducible") != G.failed_hypotheses.end());

  // The pendant halfspace lies in the corner at the attachment vertex.
  auto sp = corpus::square_with_pendant();
  auto wsp = hyperplanes(sp);
  int a = -1, b = -1;
  for (size_t i = 0; i < wsp.size(); ++i) {
    if (wsp[i].id == "00|01") a = static_cast<int>(i);
    if (wsp[i].id == "00|10") b = static_cast<int>(i);
  }
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  bool ap = std::binary_search(wsp[a].plus.begin(), wsp[a].plus.end(),
                               sp.index("11"));
  bool bp = std::binary_search(wsp[b].plus.begin(), wsp[b].plus.end(),
                               sp.index("11"));
  auto R = corner_halfspace(sp, wsp, a, ap, b, bp);
  REQUIRE(R.halfspace.has_value());
  CHECK(*R.halfspace == "11|p-");  // the {p} side of the pendant hyperplane

  // On the square no third hyperplane exists; surrogate hypotheses fail.
  auto sq = corpus::square();
  auto wsq = hyperplanes(sq);
  auto S = corner_halfspace(sq, wsq, 0, true, 1, true);
  CHECK(!S.halfspace.has_value());
  CHECK(!S.failed_hypotheses.empty());
}

TEST_CASE("automorphism check and inversions") {
  auto p = corpus::path(3);  // v0 - v1 - v2
  std::map<std::string, std::string> flip{
      {"v0", "v2"}, {"v1", "v1"}, {"v2", "v0"}};
  auto ws = hyperplanes(p);
  auto rep = check_automorphism(p, ws, flip);
  CHECK(rep.order == 2);
  CHECK(rep.inversions.empty());       // the two hyperplanes swap
  CHECK(rep.hyperplane_orbits.size() == 1);
  CHECK(rep.stable_without_inversions);

  auto sq = corpus::square();
  std::map<std::string, std::string> rot{
      {"00", "01"}, {"01", "11"}, {"11", "10"}, {"10", "00"}};
  auto wsq = hyperplanes(sq);
  auto r2 = check_automorphism(sq, wsq, rot);
  CHECK(r2.order == 4);

  std::map<std::string, std::string> bad{
      {"00", "00"}, {"01", "01"}, {"11", "10"}, {"10", "11"}};
  CHECK_THROWS_AS((void)check_automorphism(sq, wsq, bad), Error);
}

TEST_CASE("no-cross-transversality partition") {
  // The split exists exactly when the non-transversality graph on the
  // hyperplanes is disconnected: grid rows vs columns, but never on a path
  // (all pairwise disjoint, one component).
  auto g = corpus::grid(4, 4);
  auto part = no_cross_transversality_partition(g, hyperplanes(g));
  REQUIRE(part.has_value());
  CHECK(part->first.size() == 3);
  CHECK(part->second.size() == 3);

  auto p = corpus::path(4);
  CHECK(!no_cross_transversality_partition(p, hyperplanes(p)).has_value());
  auto t = corpus::tripod();
  CHECK(!no_cross_transversality_partition(t, hyperplanes(t)).has_value());
  auto c = corpus::cube3();
  CHECK(no_cross_transversality_partition(c, hyperplanes(c)).has_value());
}
