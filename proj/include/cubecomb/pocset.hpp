#pragma once

#include <string>
#include <vector>

#include "cubecomb/errors.hpp"

namespace cubecomb {

/// A finite pocset (P, <=, *): a poset with an order-reversing fixed-point-
/// free involution. Elements are opaque labels in canonical order; the order
/// matrix is reflexive and transitive.
class Pocset {
 public:
  /// Builds a pocset from labels, involution pairs and generating order
  /// pairs (a <= b). Mirrors the order through the involution, closes
  /// transitively and validates the axioms.
  static Pocset build(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>>& involution,
                      const std::vector<std::pair<std::string, std::string>>& order);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index(const std::string& label) const;
  int star(int i) const { return star_[i]; }
  bool leq(int a, int b) const { return leq_[a][b]; }

  bool incomparable(int a, int b) const;
  bool transverse(int a, int b) const;

  /// Number of involution pairs.
  int pair_count() const { return size() / 2; }
  /// Canonical representatives: the smaller-labelled element of each pair.
  std::vector<int> pair_reps() const;

  /// Max cardinality of a pairwise-transverse subset.
  int dimension() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> star_;
  std::vector<std::vector<bool>> leq_;
};

}  // namespace cubecomb
