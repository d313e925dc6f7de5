#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubecomb/complex.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

/// An edge-parallelism class of a CubeComplex. The id is the canonical
/// (lexicographically smallest) dual edge, written "u|v". The plus halfspace
/// is the side containing the smaller endpoint of that edge.
struct Hyperplane {
  std::string id;
  std::vector<std::pair<int, int>> dual_edges;  // index-sorted pairs, canonical order
  std::vector<int> plus, minus;                 // halfspace vertex sets
  std::vector<int> carrier_plus, carrier_minus;

  const std::vector<int>& halfspace(bool plus_side) const {
    return plus_side ? plus : minus;
  }
  const std::vector<int>& carrier(bool plus_side) const {
    return plus_side ? carrier_plus : carrier_minus;
  }
  std::vector<int> carrier_all() const;
};

/// Halfspace label: hyperplane id plus '+' or '-'.
std::string halfspace_label(const Hyperplane& w, bool plus_side);

/// All hyperplanes of X in canonical id order. Extraction takes the square
/// closure of edge parallelism and cross-checks each class against the
/// distance-comparison halfspace definition.
std::vector<Hyperplane> hyperplanes(const CubeComplex& X);

/// Index of the hyperplane dual to edge (u,v) within hyperplanes(X) order.
int hyperplane_of_edge(const CubeComplex& X, const std::vector<Hyperplane>& ws,
                       int u, int v);

bool is_transverse(const CubeComplex& X, const Hyperplane& a,
                   const Hyperplane& b);

/// Hyperplanes separating A from B (A in one halfspace, B in the other).
/// Returns indices into `ws`.
std::vector<int> separator_set(const CubeComplex& X,
                               const std::vector<Hyperplane>& ws,
                               const std::vector<int>& A,
                               const std::vector<int>& B);

/// All unordered triples (indices into ws) admitting pairwise-disjoint
/// halfspace choices.
std::vector<std::array<int, 3>> facing_triples(const CubeComplex& X,
                                               const std::vector<Hyperplane>& ws);

/// A maximum-length nested halfspace chain, reported as hyperplane indices
/// in chain order (innermost halfspace first). Canonical among maxima.
std::vector<int> longest_chain(const CubeComplex& X,
                               const std::vector<Hyperplane>& ws);

/// Minimum vertex distance between the carriers of two hyperplanes.
int hyperplane_distance(const CubeComplex& X, const Hyperplane& a,
                        const Hyperplane& b);

/// The halfspace pocset (H(X), containment, complementation). Elements are
/// halfspace labels in canonical order.
Pocset pocset_of(const CubeComplex& X, const std::vector<Hyperplane>& ws);

struct CornerSearch {
  std::optional<std::string> halfspace;  // label of some k with k <= h1 n h2
  // When absent, finite-scale surrogate hypotheses that fail on X:
  // "essential", "irreducible", "hyperplane-essential" (empty if all hold).
  std::vector<std::string> failed_hypotheses;
};

/// Search for a halfspace contained in the intersection of two transverse
/// halfspaces. h1_plus/h2_plus select the side of each hyperplane.
CornerSearch corner_halfspace(const CubeComplex& X,
                              const std::vector<Hyperplane>& ws, int w1,
                              bool h1_plus, int w2, bool h2_plus);

struct AutomorphismReport {
  std::vector<int> permutation;                 // vertex index map
  std::vector<std::vector<int>> hyperplane_orbits;
  std::vector<int> inversions;                  // hyperplane indices
  int order = 1;                                // order of the permutation
  std::vector<bool> power_without_inversions;   // entry k-1 for power k
  bool stable_without_inversions = false;
};

AutomorphismReport check_automorphism(
    const CubeComplex& X, const std::vector<Hyperplane>& ws,
    const std::map<std::string, std::string>& perm);

/// Partition predicate behind the one-endedness lemma: a split of the
/// hyperplane set with no cross-transversality exists iff the
/// non-transversality graph is disconnected.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
no_cross_transversality_partition(const CubeComplex& X,
                                  const std::vector<Hyperplane>& ws);

}  // namespace cubecomb
