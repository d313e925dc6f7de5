#include "cubecomb/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace cubecomb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotMedian: return "NotMedian";
    case Errc::NotConvex: return "NotConvex";
    case Errc::SameHyperplane: return "SameHyperplane";
    case Errc::NotTransverse: return "NotTransverse";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::InconsistentWall: return "InconsistentWall";
    case Errc::DuplicateWall: return "DuplicateWall";
    case Errc::NoIsomorphism: return "NoIsomorphism";
    case Errc::NonChainClass: return "NonChainClass";
    case Errc::ParaStructureViolation: return "ParaStructureViolation";
    case Errc::ProductReconstructionFailed: return "ProductReconstructionFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SpacingViolated: return "SpacingViolated";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::NotTransverseConsecutive: return "NotTransverseConsecutive";
    case Errc::NotOnCarrier: return "NotOnCarrier";
    case Errc::NotGeodesic: return "NotGeodesic";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

int CubeComplex::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(Errc::NotSimple, "unknown vertex: " + name);
  return it->second;
}

std::optional<int> CubeComplex::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CubeComplex::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int CubeComplex::diameter() const {
  int d = 0;
  for (const auto& row : dist_)
    for (int x : row) d = std::max(d, x);
  return d;
}

long CubeComplex::cube_count() const {
  long total = 0;
  for (const auto& dim : cubes_) total += static_cast<long>(dim.size());
  return total;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

namespace {

// Vertices z with d(a,z)+d(z,b) == d(a,b) for all of the three pairs.
// Returns every candidate median of the triple.
std::vector<int> median_candidates(const CubeComplex& X, int x, int y, int z) {
  std::vector<int> out;
  const int dxy = X.dist(x, y), dxz = X.dist(x, z), dyz = X.dist(y, z);
  for (int m = 0; m < X.size(); ++m) {
    if (X.dist(x, m) + X.dist(m, y) == dxy &&
        X.dist(x, m) + X.dist(m, z) == dxz &&
        X.dist(y, m) + X.dist(m, z) == dyz)
      out.push_back(m);
  }
  return out;
}

// Is the induced subgraph on `cell` (sorted, size 2^k) a k-cube? In a median
// graph it suffices that every vertex has induced degree k and opposite
// corners are at distance k.
bool induces_cube(const CubeComplex& X, const std::vector<int>& cell, int k) {
  for (int v : cell) {
    int deg = 0;
    for (int w : X.neighbors(v))
      if (std::binary_search(cell.begin(), cell.end(), w)) ++deg;
    if (deg != k) return false;
  }
  return true;
}

}  // namespace

CubeComplex validate_complex(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const ValidateOptions& opts) {
  if (vertices.empty()) fail(Errc::NotConnected, "empty vertex list");

  CubeComplex X;
  X.names_ = vertices;
  std::sort(X.names_.begin(), X.names_.end());
  for (int i = 0; i < static_cast<int>(X.names_.size()); ++i) {
    if (i > 0 && X.names_[i] == X.names_[i - 1])
      fail(Errc::NotSimple, "duplicate vertex id: " + X.names_[i]);
    X.index_[X.names_[i]] = i;
  }
  const int n = X.size();

  X.adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    int u = X.index(a), v = X.index(b);
    if (u == v) fail(Errc::NotSimple, "self-loop at " + a);
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(Errc::NotSimple, "duplicate edge " + a + "-" + b);
    X.adj_[u].push_back(v);
    X.adj_[v].push_back(u);
  }
  for (auto& nb : X.adj_) std::sort(nb.begin(), nb.end());
  for (const auto& [u, v] : seen) X.edges_.emplace_back(u, v);

  // All-pairs BFS.
  X.dist_.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& d = X.dist_[s];
    d[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : X.adj_[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (d[v] < 0)
        fail(Errc::NotConnected,
             "no path from " + X.names_[s] + " to " + X.names_[v]);
  }

  // Bipartite check (odd cycle witness implies non-median anyway).
  for (const auto& [u, v] : X.edges_)
    if (X.dist_[0][u] % 2 == X.dist_[0][v] % 2)
      fail(Errc::NotBipartite, "odd cycle through edge " + X.names_[u] + "-" + X.names_[v]);

  // Median uniqueness on triples.
  auto check_triple = [&](int x, int y, int z) {
    auto med = median_candidates(X, x, y, z);
    if (med.size() != 1) {
      fail(Errc::NotMedian, "triple (" + X.names_[x] + "," + X.names_[y] + "," +
                                X.names_[z] + ") has " +
                                std::to_string(med.size()) + " medians");
    }
  };
  if (opts.sample_triples > 0) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long t = 0; t < opts.sample_triples; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y)
        for (int z = y; z < n; ++z) check_triple(x, y, z);
  }

  // Cube inventory: k-cubes are intervals I(x,y) with |I| = 2^k that induce
  // a k-regular subgraph. Deduplicate by vertex set.
  X.cubes_.assign(2, {});
  for (int v = 0; v < n; ++v) X.cubes_[0].push_back({v});
  for (const auto& [u, v] : X.edges_) X.cubes_[1].push_back({u, v});
  int max_deg = 0;
  for (const auto& nb : X.adj_) max_deg = std::max(max_deg, (int)nb.size());
  for (int k = 2; k <= max_deg; ++k) {
    std::set<std::vector<int>> found;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (X.dist_[x][y] != k) continue;
        std::vector<int> cell;
        for (int z = 0; z < n; ++z)
          if (X.dist_[x][z] + X.dist_[z][y] == k) cell.push_back(z);
        if (static_cast<int>(cell.size()) != (1 << k)) continue;
        if (induces_cube(X, cell, k)) found.insert(cell);
      }
    if (found.empty()) break;
    X.cubes_.emplace_back(found.begin(), found.end());
  }
  while (X.cubes_.size() > 1 && X.cubes_.back().empty()) X.cubes_.pop_back();

  // Every 4-cycle spans a unique square: two vertices at distance 2 share
  // at most two common neighbors (three would give K_{2,3}), and when they
  // share two, the 4-cycle is in the square inventory.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (X.dist_[x][y] != 2) continue;
      std::vector<int> common;
      for (int w : X.adj_[x])
        if (X.adjacent(w, y)) common.push_back(w);
      if (common.size() > 2)
        fail(Errc::NotMedian, "K_{2,3} on " + X.names_[x] + "," + X.names_[y]);
      if (common.size() == 2) {
        std::vector<int> sq = {x, y, common[0], common[1]};
        std::sort(sq.begin(), sq.end());
        if (X.dimension() < 2 ||
            !std::binary_search(X.cubes_[2].begin(), X.cubes_[2].end(), sq))
          fail(Errc::InternalCheckFailed, "4-cycle without square");
      }
    }

  return X;
}

int median(const CubeComplex& X, int x, int y, int z) {
  auto med = median_candidates(X, x, y, z);
  if (med.size() != 1)
    fail(Errc::NotMedian, "median count " + std::to_string(med.size()));
  return med[0];
}

VertexSet interval(const CubeComplex& X, int x, int y) {
  VertexSet out;
  const int d = X.dist(x, y);
  for (int z = 0; z < X.size(); ++z)
    if (X.dist(x, z) + X.dist(z, y) == d) out.verts.push_back(z);
  out.convex = true;
  return out;
}

bool is_convex(const CubeComplex& X, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i; j < verts.size(); ++j) {
      auto I = interval(X, verts[i], verts[j]);
      for (int z : I.verts)
        if (!std::binary_search(verts.begin(), verts.end(), z)) return false;
    }
  return true;
}

VertexSet make_convex_set(const CubeComplex& X, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  VertexSet out{std::move(verts), false};
  if (!is_convex(X, out.verts)) fail(Errc::NotConvex, "set fails median closure");
  out.convex = true;
  return out;
}

VertexSet convex_hull(const CubeComplex& X, const std::vector<int>& seed) {
  std::vector<int> cur(seed);
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (;;) {
    std::set<int> next(cur.begin(), cur.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        auto I = interval(X, cur[i], cur[j]);
        next.insert(I.verts.begin(), I.verts.end());
      }
    if (next.size() == cur.size()) break;
    cur.assign(next.begin(), next.end());
  }
  return VertexSet{std::move(cur), true};
}

int gate_project(const CubeComplex& X, const VertexSet& Y, int x) {
  if (Y.empty() || !Y.convex) fail(Errc::NotConvex, "gate target");
  int best = Y.verts[0];
  for (int v : Y.verts)
    if (X.dist(x, v) < X.dist(x, best)) best = v;
  for (int v : Y.verts)
    if (v != best && X.dist(x, v) == X.dist(x, best))
      fail(Errc::InternalCheckFailed, "non-unique gate");
  return best;
}

int gromov_product(const CubeComplex& X, int p, int x, int y) {
  return X.dist(p, median(X, p, x, y));
}

int hyperbolicity_delta_doubled(const CubeComplex& X) {
  const int n = X.size();
  int worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          int s1 = X.dist(a, b) + X.dist(c, e);
          int s2 = X.dist(a, c) + X.dist(b, e);
          int s3 = X.dist(a, e) + X.dist(b, c);
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          worst = std::max(worst, hi - mid);
        }
  return worst;
}

BridgeDecomposition bridge(const CubeComplex& X, const VertexSet& Y,
                           const VertexSet& Z) {
  if (!Y.convex || !Z.convex || Y.empty() || Z.empty())
    fail(Errc::NotConvex, "bridge arguments");

  BridgeDecomposition out;
  std::set<int> py, pz;
  for (int z : Z.verts) py.insert(gate_project(X, Y, z));
  for (int y : Y.verts) pz.insert(gate_project(X, Z, y));
  out.proj_y_of_z = VertexSet{{py.begin(), py.end()}, false};
  out.proj_z_of_y = VertexSet{{pz.begin(), pz.end()}, false};
  out.proj_y_of_z.convex = is_convex(X, out.proj_y_of_z.verts);
  out.proj_z_of_y.convex = is_convex(X, out.proj_z_of_y.verts);

  int dYZ = X.dist(Y.verts[0], Z.verts[0]);
  for (int y : Y.verts)
    for (int z : Z.verts) dYZ = std::min(dYZ, X.dist(y, z));

  std::set<int> bverts;
  for (int y : Y.verts)
    for (int z : Z.verts)
      if (X.dist(y, z) == dYZ) {
        auto I = interval(X, y, z);
        bverts.insert(I.verts.begin(), I.verts.end());
      }
  out.bridge = VertexSet{{bverts.begin(), bverts.end()}, false};
  out.bridge.convex = is_convex(X, out.bridge.verts);

  // Rung H = I(pi_Z(g), g) for the canonical gate g.
  int g = out.proj_y_of_z.verts.front();
  int zg = gate_project(X, Z, g);
  out.rung = interval(X, zg, g);

  // Product witness: b -> (pi_{pi_Y(Z)}(b), d(b, pi_Y(b))).
  VertexSet gates = out.proj_y_of_z;
  if (!gates.convex) fail(Errc::InternalCheckFailed, "pi_Y(Z) not convex");
  for (int b : out.bridge.verts) {
    int gb = gate_project(X, gates, b);
    int pos = X.dist(b, gb);
    out.witness.emplace_back(b, gb, pos);
    if (pos > dYZ) fail(Errc::InternalCheckFailed, "bridge rung overflow");
  }
  return out;
}

std::vector<int> geodesic(const CubeComplex& X, int x, int y) {
  std::vector<int> path{x};
  int cur = x;
  while (cur != y) {
    int next = -1;
    for (int w : X.neighbors(cur))
      if (X.dist(w, y) == X.dist(cur, y) - 1) {
        next = w;
        break;  // neighbors sorted: lexicographic tie-break
      }
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace cubecomb
