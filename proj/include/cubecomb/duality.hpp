#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecomb/complex.hpp"
#include "cubecomb/hyperplane.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

/// A consistent choice of one element per involution pair, stored as sorted
/// element indices.
struct Ultrafilter {
  std::vector<int> chosen;

  bool contains(int e) const;
  bool operator==(const Ultrafilter&) const = default;
};

struct EnumerateOptions {
  // Guard against runaway inputs: search nodes explored before TooLarge.
  long node_cap = 1L << 20;
};

/// Exhaustive enumeration with consistency pruning, in canonical order
/// (lexicographic on chosen label lists).
std::vector<Ultrafilter> all_ultrafilters(const Pocset& P,
                                          const EnumerateOptions& opts = {});

/// Minimal elements of an ultrafilter under the pocset order.
std::vector<int> min_elements(const Pocset& P, const Ultrafilter& sigma);

/// The unique ultrafilter whose minimal set contains the given maximal
/// pairwise-transverse family. Maximality and transversality are verified.
Ultrafilter ultrafilter_from_transverse_family(const Pocset& P,
                                               const std::vector<int>& tau);

struct DualComplex {
  CubeComplex complex;                  // vertices named u0, u1, ...
  std::vector<Ultrafilter> ultrafilters;  // ultrafilters[i] is vertex "u<i>"
};

/// The cube complex dual to a finite pocset: vertices are ultrafilters,
/// edges are pairs differing on a single involution pair. Revalidated as a
/// median graph before return.
DualComplex dual_complex(const Pocset& P, const EnumerateOptions& opts = {});

struct Wallspace {
  std::vector<std::string> points;
  // Each wall partitions the points into two nonempty sides.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> walls;
};

struct WallspaceDual {
  DualComplex dual;
  Pocset pocset;  // wall sides ordered by inclusion
  // principal_vertex[i] is the dual vertex of points[i].
  std::vector<std::string> principal_vertex;
};

WallspaceDual wallspace_dual(const Wallspace& W,
                             const EnumerateOptions& opts = {});

/// A cubical isomorphism witness: to[i] is the Y-index of X-vertex i.
struct Isomorphism {
  std::vector<int> to;
};

/// X == dual(pocset(X)), witnessed by the vertex-to-principal-ultrafilter
/// map. Throws NoIsomorphism on failure (an implementation bug).
Isomorphism roundtrip_check(const CubeComplex& X);

/// Backtracking search over degree/distance-refined candidate maps.
std::optional<Isomorphism> complexes_isomorphic(const CubeComplex& X,
                                                const CubeComplex& Y);

}  // namespace cubecomb
