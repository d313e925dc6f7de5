#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubecomb/complex.hpp"
#include "cubecomb/duality.hpp"
#include "cubecomb/hyperplane.hpp"
#include "cubecomb/transforms.hpp"

namespace cubecomb {

struct SwitchSystem {
  std::vector<std::pair<int, int>> switches;  // hyperplane index pairs, i < j
  int spacing = 0;
  // spacing > 8*delta, the regime where the switch graph must be a forest.
  bool forest_guaranteed = false;
  int delta_doubled = 0;
};

/// Checks transversality of every switch and, per hyperplane, the pairwise
/// carrier distance >= spacing of its switch partners.
SwitchSystem validate_switch_system(const CubeComplex& X,
                                    const std::vector<Hyperplane>& ws,
                                    const std::vector<std::pair<int, int>>& switches,
                                    int spacing);

/// A connected piece of one hyperplane after cutting at its switches;
/// dual_edge_ids index into ws[hyperplane].dual_edges.
struct Piece {
  int hyperplane;
  std::vector<int> dual_edge_ids;
};

struct SwitchGraph {
  std::vector<std::pair<int, int>> switches;
  std::vector<Piece> pieces;  // type-1 vertices, canonical order
  // slots[s]: for switch {u,v}, the pieces of u on the plus/minus side of v,
  // then the pieces of v on the plus/minus side of u.
  std::vector<std::array<int, 4>> slots;
  bool forest = false;
  bool forest_guaranteed = false;
};

SwitchGraph switch_graph(const CubeComplex& X,
                         const std::vector<Hyperplane>& ws,
                         const SwitchSystem& S);

struct CrookedSubtree {
  std::vector<int> pieces;  // type-1 indices, sorted
  // (switch index, its two chosen slots) for every incident switch.
  std::vector<std::pair<int, std::array<int, 2>>> switches;
};

struct CrookedEnumeration {
  std::vector<CrookedSubtree> subtrees;  // canonical order
  bool limit_exceeded = false;
};

/// All connected, two-sided, star-complete subtrees containing at least one
/// switch, in lexicographic order of their piece lists.
CrookedEnumeration enumerate_crooked(const SwitchGraph& G, long limit);

struct WallRealization {
  std::vector<std::pair<int, int>> track;  // edges of X, canonical order
  std::vector<int> side_a, side_b;         // side_a contains vertex 0
  int quasiconvexity_defect = 0;
};

/// Deletes the track from the 1-skeleton and requires exactly two
/// components; reports how far connecting geodesics between carrier
/// vertices stray from the track's carrier.
WallRealization realize(const CubeComplex& X,
                        const std::vector<Hyperplane>& ws,
                        const SwitchGraph& G, const CrookedSubtree& tree);

/// Wallspace on the vertices of X from explicit bipartitions.
WallspaceDual recubulate(
    const CubeComplex& X,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& walls);

struct StandardPathResult {
  CubeComplex subdivided;
  std::vector<int> anchors;  // gate hops x_0 .. x_{m+1}, subdivided indices
  std::vector<int> path;     // full vertex path through the anchors
  int k = 0;                 // min consecutive anchor distance
  bool segments_geodesic = true;
  int m = 0;                 // index of the last hyperplane in seq
  int n_min = 0;             // min carrier distance of seq[i-1], seq[i+1]
  int endpoint_distance = 0; // carrier distance of seq.front(), seq.back()
  int delta_doubled = 0;
  bool hypotheses_hold = false;  // m >= 2 and n_min > 8*delta
  bool bound_holds = true;       // 3*endpoint >= n_min*(m-1) - 6*delta
};

/// Iterated gate projection through the carriers of seq, computed in the
/// cubical subdivision where each hyperplane is a convex vertex set.
StandardPathResult standard_path(const CubeComplex& X,
                                 const std::vector<Hyperplane>& ws,
                                 const std::vector<int>& seq, int x, int y);

struct ProjectionReport {
  int hyperplane = -1;  // minimizing hyperplane, index into ws
  std::string id;
  int diameter = 0;  // of the gate projection, in the subdivided metric
  std::vector<std::pair<std::string, int>> all;  // id -> diameter
};

/// Over the hyperplanes crossed by the geodesic path, the one whose gate
/// projection of the path has minimal diameter (ties to the smallest id).
ProjectionReport min_projection_hyperplane(const CubeComplex& X,
                                           const std::vector<Hyperplane>& ws,
                                           const std::vector<int>& path);

}  // namespace cubecomb
