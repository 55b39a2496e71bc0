#include "coxeter/nerve.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cox {

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const GenSet& f : facets) d = std::max(d, f.size() - 1);
  return d;
}

std::vector<std::vector<GenSet>> SimplicialComplex::simplices_by_dim() const {
  const int dim = dimension();
  std::vector<std::vector<GenSet>> by_dim(dim + 1);
  if (dim < 0) return by_dim;
  std::map<std::uint32_t, bool> present;
  for (const GenSet& f : facets) {
    // walk all nonempty subsets of the facet
    std::uint32_t bits = f.bits();
    for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits)
      present.emplace(sub, true);
  }
  for (const auto& [bits, _] : present) {
    GenSet s = GenSet::from_bits(bits);
    by_dim[s.size() - 1].push_back(s);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end(), GenSet::order_before);
  return by_dim;
}

SimplicialComplex build_nerve(const CoxeterSystem& sys, const GenSet& T) {
  check_subset(sys, T);
  if (T.size() > 20) throw CapExceeded("rank too large for the subset sweep");
  SimplicialComplex out;
  out.vertices = T.indices();

  std::unordered_map<std::uint32_t, bool> finite_memo;
  auto finite = [&](const GenSet& U) {
    auto [it, fresh] = finite_memo.try_emplace(U.bits(), false);
    if (fresh) it->second = is_finite(sys, U);
    return it->second;
  };

  // inclusion-maximal finite-type nonempty subsets of T
  std::vector<GenSet> finite_sets;
  auto idx = T.indices();
  const int k = static_cast<int>(idx.size());
  for (std::uint32_t pat = 1; pat < (1u << k); ++pat) {
    GenSet U;
    for (int i = 0; i < k; ++i)
      if (pat >> i & 1u) U.add(idx[i]);
    if (finite(U)) finite_sets.push_back(U);
  }
  for (const GenSet& U : finite_sets) {
    bool maximal = true;
    for (int i : T.indices())
      if (!U.contains(i) && finite(U.with(i))) {
        maximal = false;
        break;
      }
    if (maximal) out.facets.push_back(U);
  }
  std::sort(out.facets.begin(), out.facets.end(), GenSet::order_before);
  return out;
}

IntMatrix boundary_matrix(const std::vector<GenSet>& lower, const std::vector<GenSet>& upper) {
  std::map<std::uint32_t, int> row_of;
  for (size_t r = 0; r < lower.size(); ++r) row_of[lower[r].bits()] = static_cast<int>(r);
  IntMatrix m(lower.size(), std::vector<SnfInt>(upper.size()));
  for (size_t c = 0; c < upper.size(); ++c) {
    auto verts = upper[c].indices();
    for (size_t i = 0; i < verts.size(); ++i) {
      GenSet face = upper[c].without(verts[i]);
      m[row_of.at(face.bits())][c] = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyProfile homology(const SimplicialComplex& complex) {
  HomologyProfile profile;
  auto by_dim = complex.simplices_by_dim();
  const int dim = static_cast<int>(by_dim.size()) - 1;
  if (dim < 0) return profile;  // empty complex: everything zero

  profile.simplex_counts.resize(dim + 1);
  for (int k = 0; k <= dim; ++k)
    profile.simplex_counts[k] = static_cast<long long>(by_dim[k].size());
  for (int k = 0; k <= dim; ++k)
    profile.euler += (k % 2 == 0 ? 1 : -1) * profile.simplex_counts[k];

  // ranks and invariant factors of each boundary map; d_0 = 0
  std::vector<std::vector<SnfInt>> invariants(dim + 2);
  for (int k = 1; k <= dim; ++k)
    invariants[k] = smith_invariants(boundary_matrix(by_dim[k - 1], by_dim[k]));

  profile.betti.resize(dim + 1);
  profile.reduced_betti.resize(dim + 1);
  profile.torsion.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    long long rank_k = static_cast<long long>(invariants[k].size());
    long long rank_k1 = static_cast<long long>(invariants[k + 1].size());
    profile.betti[k] = profile.simplex_counts[k] - rank_k - rank_k1;
    profile.reduced_betti[k] = k == 0 ? profile.betti[k] - 1 : profile.betti[k];
    for (const SnfInt& d : invariants[k + 1])
      if (d > 1) profile.torsion[k].push_back(d);
  }
  return profile;
}

DimBounds dimss_bounds(const CoxeterSystem& sys, int subset_rank_cap) {
  const GenSet all = GenSet::all(sys.rank());
  if (is_finite(sys, all)) throw DomainError("bounds undefined for finite groups");
  if (sys.rank() > 20) throw CapExceeded("rank too large for the subset sweep");
  const int cap =
      subset_rank_cap <= 0 ? sys.rank() : std::min(subset_rank_cap, sys.rank());

  DimBounds bounds;

  // homology side: largest degree with nonzero reduced homology of any nerve
  int best_k = -1;
  GenSet best_T;
  for (int size = 0; size <= cap; ++size)
    for (const GenSet& T : subsets_of_size(sys.rank(), size)) {
      HomologyProfile profile = homology(build_nerve(sys, T));
      for (int k = static_cast<int>(profile.reduced_betti.size()) - 1; k > best_k; --k)
        if (profile.reduced_nonzero(k)) {
          best_k = k;
          best_T = T;
          break;
        }
    }

  // floor: largest n with an infinite (n+1)-spherical special subgroup,
  // i.e. v(W_T) - 1 over infinite subsets T
  std::unordered_map<std::uint32_t, bool> finite_memo;
  auto finite = [&](const GenSet& U) {
    auto [it, fresh] = finite_memo.try_emplace(U.bits(), false);
    if (fresh) it->second = is_finite(sys, U);
    return it->second;
  };
  int best_n = -1;
  GenSet best_nT;
  for (int size = 2; size <= sys.rank(); ++size)
    for (const GenSet& T : subsets_of_size(sys.rank(), size)) {
      if (finite(T)) continue;
      auto idx = T.indices();
      int v = 0;
      for (int m = 1; m <= T.size(); ++m) {
        bool all_finite = true;
        for (const GenSet& pattern : subsets_of_size(T.size(), m)) {
          GenSet sub;
          for (int i : pattern.indices()) sub.add(idx[i]);
          if (!finite(sub)) {
            all_finite = false;
            break;
          }
        }
        if (!all_finite) break;
        v = m;
      }
      if (v - 1 > best_n) {
        best_n = v - 1;
        best_nT = T;
      }
    }

  if (best_k >= best_n) {
    bounds.kind = DimBounds::WitnessKind::Homology;
    bounds.witness_T = best_T;
    bounds.witness_k = best_k;
    bounds.lower = 1 + best_k;
  } else {
    bounds.kind = DimBounds::WitnessKind::Spherical;
    bounds.witness_T = best_nT;
    bounds.witness_k = best_n;
    bounds.lower = 1 + best_n;
  }

  // Davis-Moussong dimension: the largest finite special rank
  SimplicialComplex nerve = build_nerve(sys, all);
  bounds.upper = nerve.dimension() + 1;
  return bounds;
}

}  // namespace cox
