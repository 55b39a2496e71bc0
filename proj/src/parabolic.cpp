#include "coxeter/parabolic.hpp"

namespace cox {

GenSet special_intersection(const CoxeterSystem& sys, const GenSet& T, const GenSet& U) {
  check_subset(sys, T);
  check_subset(sys, U);
  return T & U;
}

namespace {

// d^-1 s d lands on a letter u of U exactly when s d = d u; both sides are
// reduced words of length l(d)+1 since d is (T,U)-reduced, so comparing
// canonical forms of the short products avoids reducing the long conjugate.
bool conjugates_into(const CoxeterSystem& sys, const GroupElement& d, int s,
                     const GenSet& U, long cap) {
  Word sd = d.word();
  sd.insert(sd.begin(), s);
  GroupElement lhs = reduce(sys, sd, cap);
  for (int u : U.indices()) {
    Word du = d.word();
    du.push_back(u);
    if (reduce(sys, du, cap) == lhs) return true;
  }
  return false;
}

}  // namespace

ParabolicIntersection parabolic_intersection(const CoxeterSystem& sys, const GenSet& T,
                                             const GenSet& U, const Word& w, long cap) {
  auto dec = double_coset_reduce(sys, T, U, w, cap);
  GenSet core;
  for (int s : T.indices())
    if (conjugates_into(sys, dec.d, s, U, cap)) core.add(s);
  return ParabolicIntersection{dec.x, core};
}

bool parabolic_inclusion(const CoxeterSystem& sys, const GenSet& T, const GenSet& U,
                         const Word& w, long cap) {
  auto dec = double_coset_reduce(sys, T, U, w, cap);
  for (int s : T.indices())
    if (!conjugates_into(sys, dec.d, s, U, cap)) return false;
  return true;
}

}  // namespace cox
