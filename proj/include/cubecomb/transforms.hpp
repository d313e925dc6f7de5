#pragma once

#include <string>
#include <vector>

#include "cubecomb/complex.hpp"
#include "cubecomb/duality.hpp"
#include "cubecomb/hyperplane.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

struct SubdivisionResult {
  CubeComplex subdivided;
  // Original vertex index -> subdivided vertex index (its 0-cube).
  std::vector<int> vertex_embedding;
  // Subdivided hyperplane index -> original hyperplane index; every fiber
  // has exactly two elements.
  std::vector<int> hyperplane_cover;
  // Subdivided vertex index -> the original cube it is the barycentre of.
  std::vector<std::vector<int>> cell_of;
};

/// Cubical subdivision: one new vertex per cube of X, adjacency given by
/// face incidence with dimension gap one. Distances double; checked.
SubdivisionResult subdivide(const CubeComplex& X);

struct QuotientResult {
  CubeComplex quotient;  // dual of the sub-pocset, vertices u0, u1, ...
  // X vertex index -> quotient vertex index (ultrafilter of kept sides).
  std::vector<int> vertex_map;
};

/// Restriction quotient: collapse every hyperplane not in `keep`
/// (hyperplane indices into hyperplanes(X)).
QuotientResult restriction_quotient(const CubeComplex& X,
                                    const std::vector<int>& keep);

/// Finite-scale strong parallelism: w1, w2 (indices) are not transverse, no
/// hyperplane separates them, they cross the same hyperplanes, and every
/// vertex of the slab between them meets a dual edge of each.
bool strongly_parallel(const CubeComplex& X, const std::vector<Hyperplane>& ws,
                       int w1, int w2);

struct ParaPartition {
  // Each class is a sorted list of halfspace labels, totally ordered by
  // inclusion; classes listed in canonical (smallest-label) order.
  std::vector<std::vector<std::string>> halfspace_classes;
  std::vector<int> class_star;  // involution on class indices
  // Partition of hyperplane indices induced by the halfspace classes.
  std::vector<std::vector<int>> hyperplane_classes;
  // Quotient pocset; each class is labelled by its smallest halfspace label.
  Pocset quotient;
};

/// Transitive closure of pairwise strong parallelism on consistently
/// oriented halfspaces, with the chain and outside-uniformity checks.
ParaPartition para_classes(const CubeComplex& X,
                           const std::vector<Hyperplane>& ws);

struct CompressResult {
  CubeComplex compressed;  // dual of the quotient pocset
  ParaPartition classes;
};

/// Collapse strongly parallel classes; the result is re-scanned to confirm
/// it has no strongly parallel pair.
CompressResult compress(const CubeComplex& X);

struct DeRhamDecomposition {
  // Partition of hyperplane indices: components of the non-transversality
  // graph, ordered by smallest member.
  std::vector<std::vector<int>> classes;
  std::vector<CubeComplex> factors;  // one restriction quotient per class
  CubeComplex product;               // explicit product of the factors
  Isomorphism witness;               // X -> product
};

DeRhamDecomposition derham(const CubeComplex& X);

/// Product complex; vertex names are the factor names joined with ','.
CubeComplex product_complex(const CubeComplex& A, const CubeComplex& B);

struct TrimResult {
  CubeComplex trimmed;
  std::vector<std::string> removed;  // hyperplane ids, in removal order
};

/// Iteratively collapse hyperplanes having an r-shallow halfspace (every
/// vertex of the halfspace within r of the carrier) until none remain.
TrimResult trim_shallow(const CubeComplex& X, int r);

}  // namespace cubecomb
