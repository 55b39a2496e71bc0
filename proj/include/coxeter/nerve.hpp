#pragma once

#include <vector>

#include "coxeter/classify.hpp"
#include "coxeter/snf.hpp"
#include "coxeter/system.hpp"

namespace cox {

// The nerve on T: subsets span a simplex exactly when they generate a finite
// group. Stored by facets (inclusion-maximal finite-type subsets); the face
// closure is implied.
struct SimplicialComplex {
  std::vector<int> vertices;   // ascending generator indices
  std::vector<GenSet> facets;  // pairwise non-nested, deterministic order

  int dimension() const;  // -1 when empty

  // Faces grouped by dimension; within a dimension, subset order. This is the
  // ordered basis the chain complex uses.
  std::vector<std::vector<GenSet>> simplices_by_dim() const;
};

SimplicialComplex build_nerve(const CoxeterSystem& sys, const GenSet& T);

// Integral simplicial homology via Smith normal form, with lexicographically
// oriented simplices. Unreduced and reduced Betti numbers are both kept;
// they differ only in degree 0.
struct HomologyProfile {
  std::vector<long long> simplex_counts;       // per degree
  std::vector<long long> betti;                // unreduced
  std::vector<long long> reduced_betti;
  std::vector<std::vector<SnfInt>> torsion;    // divisors > 1, divisibility chain
  long long euler = 0;                         // alternating simplex count

  bool reduced_nonzero(int k) const {
    if (k < 0 || k >= static_cast<int>(reduced_betti.size())) return false;
    return reduced_betti[k] != 0 || !torsion[k].empty();
  }
};

HomologyProfile homology(const SimplicialComplex& complex);

// Boundary map from the (k)-simplices `upper` to the (k-1)-simplices `lower`,
// rows indexed by `lower`, with the ascending-vertex orientation.
IntMatrix boundary_matrix(const std::vector<GenSet>& lower, const std::vector<GenSet>& upper);

// Bounds on the least dimension of a complete CAT(0) space admitting a proper
// semisimple action. Defined for infinite groups only.
struct DimBounds {
  int lower = 0;  // 1 + best witness degree
  int upper = 0;  // largest rank of a finite special subgroup
  enum class WitnessKind { Homology, Spherical };
  WitnessKind kind = WitnessKind::Homology;
  GenSet witness_T;
  int witness_k = 0;  // homology degree, or the n of an infinite (n+1)-spherical subgroup
  // degree-0 homology witnesses use reduced homology; recorded for the report
  static constexpr const char* kConvention = "reduced";
};

// subset_rank_cap <= 0 means |S|. The subset sweep is exponential in |S|.
DimBounds dimss_bounds(const CoxeterSystem& sys, int subset_rank_cap = 0);

}  // namespace cox
