#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubecomb/errors.hpp"

namespace cubecomb {

/// How thoroughly validate_complex checks the median property.
struct ValidateOptions {
  // Exhaustive O(n^3) triple check by default; sample_triples > 0 switches to
  // a randomized spot check (seeded, deterministic).
  long sample_triples = 0;
  unsigned long seed = 0;
};

/// A finite CAT(0) cube complex, stored by its 1-skeleton (a median graph).
/// Cubes are derived from the skeleton: a k-cube is the interval between any
/// pair of its opposite corners. Immutable after construction.
class CubeComplex {
 public:
  /// Empty placeholder; only validate_complex produces usable instances.
  CubeComplex() = default;

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int dist(int u, int v) const { return dist_[u][v]; }
  int diameter() const;

  /// Edge list in canonical order, each pair index-sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// cubes()[k] lists all k-cubes as sorted vertex-index sets; cubes()[0]
  /// are the vertices, cubes()[1] the edges.
  const std::vector<std::vector<std::vector<int>>>& cubes() const {
    return cubes_;
  }
  int dimension() const { return static_cast<int>(cubes_.size()) - 1; }
  long cube_count() const;

  friend CubeComplex validate_complex(const std::vector<std::string>& vertices,
                                      const std::vector<std::pair<std::string, std::string>>& edges,
                                      const ValidateOptions& opts);

 private:
  std::vector<std::string> names_;  // lexicographically sorted
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<std::vector<int>>> cubes_;
};

/// A subset of vertices of some CubeComplex, sorted by index. The convex
/// flag is set only after verification.
struct VertexSet {
  std::vector<int> verts;
  bool convex = false;

  bool contains(int v) const;
  bool empty() const { return verts.empty(); }
  int size() const { return static_cast<int>(verts.size()); }
};

CubeComplex validate_complex(const std::vector<std::string>& vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const ValidateOptions& opts = {});

int median(const CubeComplex& X, int x, int y, int z);

/// I(x,y) = { z : median(x,y,z) = z }, flagged convex.
VertexSet interval(const CubeComplex& X, int x, int y);

/// Least convex superset of S (interval closure to fixpoint), flagged convex.
VertexSet convex_hull(const CubeComplex& X, const std::vector<int>& seed);

/// Exhaustive convexity check; returns S with the flag set on success.
bool is_convex(const CubeComplex& X, const std::vector<int>& verts);
VertexSet make_convex_set(const CubeComplex& X, std::vector<int> verts);

/// Nearest-point projection onto a convex set. Throws NotConvex when the
/// flag is missing.
int gate_project(const CubeComplex& X, const VertexSet& Y, int x);

int gromov_product(const CubeComplex& X, int p, int x, int y);

/// Minimal delta in the four-point condition, doubled so the result is an
/// exact integer (delta itself is a half-integer).
int hyperbolicity_delta_doubled(const CubeComplex& X);

struct BridgeDecomposition {
  VertexSet proj_y_of_z;  // pi_Y(Z)
  VertexSet proj_z_of_y;  // pi_Z(Y)
  VertexSet rung;         // H, an interval realizing d(Y,Z)
  VertexSet bridge;       // B(Y,Z)
  // One entry per bridge vertex: (vertex, gate in pi_Y(Z), rung position).
  std::vector<std::tuple<int, int, int>> witness;
};

BridgeDecomposition bridge(const CubeComplex& X, const VertexSet& Y,
                           const VertexSet& Z);

/// A canonical combinatorial geodesic from x to y (lexicographic tie-break).
std::vector<int> geodesic(const CubeComplex& X, int x, int y);

}  // namespace cubecomb
