#include "cubecomb/bending.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cubecomb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// For each square of X, its two opposite edge pairs with their hyperplanes.
struct SquareInfo {
  // pairs[t] = (hyperplane, dual edge, dual edge), edges as vertex pairs.
  std::array<std::tuple<int, std::pair<int, int>, std::pair<int, int>>, 2> pairs;
};

std::vector<SquareInfo> square_infos(const CubeComplex& X,
                                     const std::vector<Hyperplane>& ws) {
  std::vector<SquareInfo> out;
  if (X.dimension() < 2) return out;
  for (const auto& sq : X.cubes()[2]) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < sq.size(); ++i)
      for (size_t j = i + 1; j < sq.size(); ++j)
        if (X.adjacent(sq[i], sq[j])) es.emplace_back(sq[i], sq[j]);
    if (es.size() != 4)
      fail(Errc::InternalCheckFailed, "square without four edges");
    SquareInfo info;
    int t = 0;
    std::set<size_t> used;
    for (size_t i = 0; i < es.size(); ++i) {
      if (used.count(i)) continue;
      for (size_t j = i + 1; j < es.size(); ++j) {
        if (used.count(j)) continue;
        if (es[i].first != es[j].first && es[i].first != es[j].second &&
            es[i].second != es[j].first && es[i].second != es[j].second) {
          int h = hyperplane_of_edge(X, ws, es[i].first, es[i].second);
          if (h != hyperplane_of_edge(X, ws, es[j].first, es[j].second))
            fail(Errc::InternalCheckFailed, "opposite edges of a square cross "
                                            "different hyperplanes");
          info.pairs[t++] = {h, es[i], es[j]};
          used.insert(i);
          used.insert(j);
          break;
        }
      }
    }
    if (t != 2) fail(Errc::InternalCheckFailed, "square pairing failed");
    out.push_back(info);
  }
  return out;
}

}  // namespace

SwitchSystem validate_switch_system(
    const CubeComplex& X, const std::vector<Hyperplane>& ws,
    const std::vector<std::pair<int, int>>& switches, int spacing) {
  SwitchSystem S;
  S.spacing = spacing;
  S.delta_doubled = hyperbolicity_delta_doubled(X);
  S.forest_guaranteed = spacing > 4 * S.delta_doubled;  // spacing > 8*delta
  const int W = static_cast<int>(ws.size());
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : switches) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= W || a == b)
      fail(Errc::NotSimple, "bad switch pair " + std::to_string(a) + "," +
                                std::to_string(b));
    if (!seen.insert({a, b}).second)
      fail(Errc::NotSimple, "duplicate switch " + ws[a].id + "," + ws[b].id);
    if (!is_transverse(X, ws[a], ws[b]))
      fail(Errc::NotTransverse, ws[a].id + " vs " + ws[b].id);
    S.switches.emplace_back(a, b);
  }
  std::sort(S.switches.begin(), S.switches.end());
  for (int u = 0; u < W; ++u) {
    std::vector<int> partners;
    for (auto [a, b] : S.switches) {
      if (a == u) partners.push_back(b);
      if (b == u) partners.push_back(a);
    }
    for (size_t i = 0; i < partners.size(); ++i)
      for (size_t j = i + 1; j < partners.size(); ++j) {
        int d = hyperplane_distance(X, ws[partners[i]], ws[partners[j]]);
        if (d < spacing)
          fail(Errc::SpacingViolated,
               "at " + ws[u].id + ": d(" + ws[partners[i]].id + "," +
                   ws[partners[j]].id + ") = " + std::to_string(d) + " < " +
                   std::to_string(spacing));
      }
  }
  return S;
}

SwitchGraph switch_graph(const CubeComplex& X,
                         const std::vector<Hyperplane>& ws,
                         const SwitchSystem& S) {
  SwitchGraph G;
  G.switches = S.switches;
  G.forest_guaranteed = S.forest_guaranteed;

  std::vector<int> support;
  for (auto [a, b] : S.switches) {
    support.push_back(a);
    support.push_back(b);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  auto squares = square_infos(X, ws);

  // piece_of[w] maps each dual edge id of hyperplane w to its piece index.
  std::map<int, std::vector<int>> piece_of;
  for (int w : support) {
    const auto& dual = ws[w].dual_edges;
    std::map<std::pair<int, int>, int> edge_id;
    for (size_t i = 0; i < dual.size(); ++i)
      edge_id[dual[i]] = static_cast<int>(i);
    std::set<int> partners;
    for (auto [a, b] : S.switches) {
      if (a == w) partners.insert(b);
      if (b == w) partners.insert(a);
    }
    UnionFind uf(static_cast<int>(dual.size()));
    for (const auto& sq : squares)
      for (int t = 0; t < 2; ++t) {
        auto [h, e1, e2] = sq.pairs[t];
        if (h != w) continue;
        auto [other, o1, o2] = sq.pairs[1 - t];
        if (partners.count(other)) continue;  // cut at the switch crossing
        uf.unite(edge_id.at(e1), edge_id.at(e2));
      }
    std::map<int, std::vector<int>> comps;
    for (size_t i = 0; i < dual.size(); ++i)
      comps[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> ordered;
    for (auto& [root, ids] : comps) ordered.push_back(ids);
    std::sort(ordered.begin(), ordered.end());
    piece_of[w].assign(dual.size(), -1);
    for (auto& ids : ordered) {
      int p = static_cast<int>(G.pieces.size());
      for (int id : ids) piece_of[w][id] = p;
      G.pieces.push_back({w, ids});
    }
  }

  // Slots: for switch {u,v}, the piece of u adjacent to the crossing on each
  // side of v, then symmetrically for v.
  for (size_t s = 0; s < G.switches.size(); ++s) {
    auto [u, v] = G.switches[s];
    std::array<int, 4> slot{-1, -1, -1, -1};
    auto fill = [&](int w, int other, int base) {
      std::map<std::pair<int, int>, int> edge_id;
      for (size_t i = 0; i < ws[w].dual_edges.size(); ++i)
        edge_id[ws[w].dual_edges[i]] = static_cast<int>(i);
      for (const auto& sq : squares)
        for (int t = 0; t < 2; ++t) {
          auto [h, e1, e2] = sq.pairs[t];
          if (h != w) continue;
          auto [oh, o1, o2] = sq.pairs[1 - t];
          if (oh != other) continue;
          for (const auto& e : {e1, e2}) {
            bool plus = std::binary_search(ws[other].plus.begin(),
                                           ws[other].plus.end(), e.first);
            int idx = base + (plus ? 0 : 1);
            int p = piece_of.at(w)[edge_id.at(e)];
            if (slot[idx] != -1 && slot[idx] != p)
              fail(Errc::InternalCheckFailed,
                   "ambiguous slot at switch " + ws[u].id + "," + ws[v].id);
            slot[idx] = p;
          }
        }
    };
    fill(u, v, 0);
    fill(v, u, 2);
    for (int i = 0; i < 4; ++i)
      if (slot[i] == -1)
        fail(Errc::InternalCheckFailed,
             "missing slot at switch " + ws[u].id + "," + ws[v].id);
    {
      std::set<int> distinct(slot.begin(), slot.end());
      if (distinct.size() != 4)
        fail(Errc::InternalCheckFailed,
             "switch slots not distinct at " + ws[u].id + "," + ws[v].id);
    }
    G.slots.push_back(slot);
  }

  // Forest check over all pieces and switches.
  G.forest = true;
  {
    const int P = static_cast<int>(G.pieces.size());
    UnionFind uf(P + static_cast<int>(G.switches.size()));
    for (size_t s = 0; s < G.switches.size(); ++s)
      for (int p : G.slots[s])
        if (!uf.unite(P + static_cast<int>(s), p)) G.forest = false;
  }
  return G;
}

CrookedEnumeration enumerate_crooked(const SwitchGraph& G, long limit) {
  CrookedEnumeration out;
  const int P = static_cast<int>(G.pieces.size());
  // Only pieces incident to a switch can participate.
  std::vector<std::vector<int>> switches_of(P);
  for (size_t s = 0; s < G.slots.size(); ++s)
    for (int p : G.slots[s]) switches_of[p].push_back(static_cast<int>(s));
  std::vector<int> candidates;
  for (int p = 0; p < P; ++p)
    if (!switches_of[p].empty()) candidates.push_back(p);

  std::vector<int> chosen;
  auto try_accept = [&]() -> bool {  // false once the limit trips
    if (chosen.empty()) return true;
    std::set<int> in(chosen.begin(), chosen.end());
    CrookedSubtree tree;
    tree.pieces = chosen;
    for (size_t s = 0; s < G.slots.size(); ++s) {
      std::vector<int> hit;
      for (int p : G.slots[s])
        if (in.count(p)) hit.push_back(p);
      if (hit.empty()) continue;
      if (hit.size() != 2) return true;  // star-completeness/degree-2 fails
      tree.switches.push_back(
          {static_cast<int>(s), {hit[0], hit[1]}});
    }
    if (tree.switches.empty()) return true;
    // Connected and acyclic on pieces + incident switches.
    std::map<int, int> node;  // piece -> node id
    for (int p : chosen) node[p] = static_cast<int>(node.size());
    int n = static_cast<int>(node.size() + tree.switches.size());
    UnionFind uf(n);
    int joins = 0;
    for (size_t k = 0; k < tree.switches.size(); ++k) {
      int sn = static_cast<int>(node.size() + k);
      for (int p : tree.switches[k].second) {
        if (!uf.unite(sn, node.at(p))) return true;  // cycle
        ++joins;
      }
    }
    if (joins != n - 1) return true;  // disconnected
    if (static_cast<long>(out.subtrees.size()) >= limit) {
      out.limit_exceeded = true;
      return false;
    }
    out.subtrees.push_back(std::move(tree));
    return true;
  };

  // Lexicographic order over sorted piece lists.
  auto rec = [&](auto&& self, size_t from) -> bool {
    if (!try_accept()) return false;
    for (size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      bool go = self(self, i + 1);
      chosen.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

WallRealization realize(const CubeComplex& X,
                        const std::vector<Hyperplane>& ws,
                        const SwitchGraph& G, const CrookedSubtree& tree) {
  WallRealization out;
  std::set<std::pair<int, int>> track;
  for (int p : tree.pieces) {
    const Piece& piece = G.pieces[p];
    for (int id : piece.dual_edge_ids)
      track.insert(ws[piece.hyperplane].dual_edges[id]);
  }
  out.track.assign(track.begin(), track.end());

  UnionFind uf(X.size());
  for (const auto& e : X.edges())
    if (!track.count(e)) uf.unite(e.first, e.second);
  std::set<int> roots;
  for (int v = 0; v < X.size(); ++v) roots.insert(uf.find(v));
  if (roots.size() != 2)
    fail(Errc::NotSeparating,
         "track leaves " + std::to_string(roots.size()) + " components");
  int root_a = uf.find(0);
  for (int v = 0; v < X.size(); ++v)
    (uf.find(v) == root_a ? out.side_a : out.side_b).push_back(v);

  // How far do geodesics between carrier vertices stray from the carrier?
  std::vector<int> carrier;
  for (const auto& [a, b] : out.track) {
    carrier.push_back(a);
    carrier.push_back(b);
  }
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  auto dist_to_carrier = [&](int v) {
    int best = X.size();
    for (int c : carrier) best = std::min(best, X.dist(v, c));
    return best;
  };
  for (size_t i = 0; i < carrier.size(); ++i)
    for (size_t j = i + 1; j < carrier.size(); ++j)
      for (int v : geodesic(X, carrier[i], carrier[j]))
        out.quasiconvexity_defect =
            std::max(out.quasiconvexity_defect, dist_to_carrier(v));
  return out;
}

WallspaceDual recubulate(
    const CubeComplex& X,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        walls) {
  Wallspace W;
  W.points = X.names();
  W.walls = walls;
  return wallspace_dual(W);
}

namespace {

// The barycentre copy of hyperplane w inside the subdivision: every cube
// containing a full dual edge of w.
VertexSet hyperplane_in_subdivision(const CubeComplex& sub,
                                    const std::vector<std::vector<int>>& cell_of,
                                    const Hyperplane& w) {
  std::vector<int> verts;
  for (int v = 0; v < sub.size(); ++v) {
    const auto& cell = cell_of[v];
    for (const auto& [a, b] : w.dual_edges)
      if (std::binary_search(cell.begin(), cell.end(), a) &&
          std::binary_search(cell.begin(), cell.end(), b)) {
        verts.push_back(v);
        break;
      }
  }
  auto set = make_convex_set(sub, std::move(verts));
  if (!set.convex)
    fail(Errc::InternalCheckFailed,
         "subdivided hyperplane " + w.id + " not convex");
  return set;
}

}  // namespace

StandardPathResult standard_path(const CubeComplex& X,
                                 const std::vector<Hyperplane>& ws,
                                 const std::vector<int>& seq, int x, int y) {
  if (seq.empty()) fail(Errc::NotSimple, "empty hyperplane sequence");
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!is_transverse(X, ws[seq[i]], ws[seq[i + 1]]))
      fail(Errc::NotTransverseConsecutive, std::to_string(i));
  auto on_carrier = [&](const Hyperplane& w, int v) {
    auto c = w.carrier_all();
    return std::binary_search(c.begin(), c.end(), v);
  };
  if (!on_carrier(ws[seq.front()], x))
    fail(Errc::NotOnCarrier, X.name(x) + " not on " + ws[seq.front()].id);
  if (!on_carrier(ws[seq.back()], y))
    fail(Errc::NotOnCarrier, X.name(y) + " not on " + ws[seq.back()].id);

  auto S = subdivide(X);
  StandardPathResult out;
  out.subdivided = S.subdivided;
  out.m = static_cast<int>(seq.size()) - 1;
  out.delta_doubled = hyperbolicity_delta_doubled(X);

  out.anchors.push_back(S.vertex_embedding[x]);
  for (size_t i = 1; i < seq.size(); ++i) {
    auto M = hyperplane_in_subdivision(S.subdivided, S.cell_of, ws[seq[i]]);
    out.anchors.push_back(gate_project(S.subdivided, M, out.anchors.back()));
  }
  out.anchors.push_back(S.vertex_embedding[y]);

  out.k = 2 * X.diameter() + 1;
  for (size_t i = 0; i + 1 < out.anchors.size(); ++i) {
    out.k = std::min(out.k,
                     S.subdivided.dist(out.anchors[i], out.anchors[i + 1]));
    auto leg = geodesic(S.subdivided, out.anchors[i], out.anchors[i + 1]);
    if (i > 0) leg.erase(leg.begin());
    out.path.insert(out.path.end(), leg.begin(), leg.end());
  }
  for (size_t i = 0; i + 2 < out.anchors.size(); ++i)
    if (S.subdivided.dist(out.anchors[i], out.anchors[i + 1]) +
            S.subdivided.dist(out.anchors[i + 1], out.anchors[i + 2]) !=
        S.subdivided.dist(out.anchors[i], out.anchors[i + 2]))
      out.segments_geodesic = false;

  out.endpoint_distance =
      hyperplane_distance(X, ws[seq.front()], ws[seq.back()]);
  if (out.m >= 2) {
    out.n_min = X.size();
    for (int i = 1; i < out.m; ++i)
      out.n_min = std::min(
          out.n_min, hyperplane_distance(X, ws[seq[i - 1]], ws[seq[i + 1]]));
  }
  out.hypotheses_hold = out.m >= 2 && out.n_min > 4 * out.delta_doubled;
  out.bound_holds = 3 * out.endpoint_distance >=
                    out.n_min * (out.m - 1) - 3 * out.delta_doubled;
  return out;
}

ProjectionReport min_projection_hyperplane(const CubeComplex& X,
                                           const std::vector<Hyperplane>& ws,
                                           const std::vector<int>& path) {
  if (path.empty()) fail(Errc::NotGeodesic, "empty path");
  std::vector<int> crossings(ws.size(), 0);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!X.adjacent(path[i], path[i + 1]))
      fail(Errc::NotGeodesic, "not an edge path at step " + std::to_string(i));
    ++crossings[hyperplane_of_edge(X, ws, path[i], path[i + 1])];
  }
  for (size_t w = 0; w < ws.size(); ++w)
    if (crossings[w] > 1)
      fail(Errc::NotGeodesic, "crosses " + ws[w].id + " twice");

  auto S = subdivide(X);
  ProjectionReport out;
  for (size_t w = 0; w < ws.size(); ++w) {
    if (crossings[w] == 0) continue;
    auto M = hyperplane_in_subdivision(S.subdivided, S.cell_of, ws[w]);
    std::vector<int> proj;
    for (int v : path)
      proj.push_back(gate_project(S.subdivided, M, S.vertex_embedding[v]));
    int diam = 0;
    for (size_t i = 0; i < proj.size(); ++i)
      for (size_t j = i + 1; j < proj.size(); ++j)
        diam = std::max(diam, S.subdivided.dist(proj[i], proj[j]));
    out.all.emplace_back(ws[w].id, diam);
    if (out.hyperplane == -1 || diam < out.diameter) {
      out.hyperplane = static_cast<int>(w);
      out.id = ws[w].id;
      out.diameter = diam;
    }
  }
  if (out.hyperplane == -1)
    fail(Errc::NotGeodesic, "path crosses no hyperplane");
  return out;
}

}  // namespace cubecomb
