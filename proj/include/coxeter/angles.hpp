#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/words.hpp"

namespace cox {

// A Gersten-Stallings angle: zero, or pi/m with m >= 2.
class Angle {
 public:
  static Angle zero() { return Angle(); }
  static Angle pi_over(int m) {
    if (m < 2) throw InvalidArgument("nonzero angles are pi/m with m >= 2");
    Angle a;
    a.m_ = m;
    return a;
  }

  bool is_zero() const { return m_ == 0; }
  int m() const {
    if (m_ == 0) throw InvalidArgument("zero angle has no denominator");
    return m_;
  }
  std::string str() const { return m_ == 0 ? "0" : "pi/" + std::to_string(m_); }

  bool operator==(const Angle&) const = default;

 private:
  int m_ = 0;  // 0 encodes the zero angle
};

// Closed formula for the angle between W_T and W_U over their intersection:
// zero when one contains the other (or every relevant label is infinite),
// otherwise pi/min{m_ij : i in T-U, j in U-T}. Requires T != U.
Angle gs_angle_formula(const CoxeterSystem& sys, const GenSet& T, const GenSet& U);

// Independent oracle: enumerate <T u U>, build the bipartite graph whose
// vertices are the left cosets of W_T and of W_U and whose edges are the left
// cosets of W_{T n U}, and return 2*pi / girth (zero if the graph is a
// forest). Throws CapExceeded ("oracle infeasible") when <T u U> does not
// enumerate within enum_cap.
Angle gs_angle_oracle(const CoxeterSystem& sys, const GenSet& T, const GenSet& U,
                      long enum_cap);

// The v-splitting of W determined by S': the metric |S'|-1 simplex of groups
// whose face opposite to A ( = proper subset of S') carries the local group
// <A u (S - S')>. The maximal face carries <S - S'>.
struct SimplexOfGroups {
  CoxeterSystem ambient;
  GenSet sprime;
  int v = 0;  // |sprime| - 1
  enum class Metric { Euclidean, Hyperbolic };
  Metric metric = Metric::Euclidean;
  // (A, A u (S - S')), vertices first: sorted by |A| descending, then subset
  // order. Covers every proper subset A of S'.
  std::vector<std::pair<GenSet, GenSet>> faces;
};

// Requires: |S'| = v(W)+1, <S'> infinite, every proper subset of S' finite.
// The colimit conditions are re-checked at construction and fail only on
// internal error.
SimplexOfGroups v_splitting(const CoxeterSystem& sys, const GenSet& sprime);

// Exact rational multiple of pi.
struct PiMultiple {
  long long num = 0;
  long long den = 1;  // reduced, den > 0
  std::string str() const;
};

struct CurvatureReport {
  std::array<Angle, 3> angles;  // sorted by ascending denominator
  PiMultiple sum;
  enum class Compare { LessThanPi, EqualPi };
  Compare compare = Compare::LessThanPi;
  enum class Verdict { Cat0, CatMinus1 };
  Verdict verdict = Verdict::Cat0;
};

// Angle sum of a triangle-of-groups splitting (v = 2 only), compared with pi
// in exact rational arithmetic. Strictly below pi is CAT(-1); equal is CAT(0).
CurvatureReport triangle_curvature(const SimplexOfGroups& splitting);

// Fixed-point verdict for actions on CAT(0) n-complexes.
struct FaVerdict {
  int n = 0;
  enum class Status { Yes, No, ConjecturalNo };
  Status status = Status::Yes;
  // "spherical": every special subgroup of rank <= n+1 is finite.
  // "amalgam": an infinite label splits W over a codimension-2 subgroup.
  // "triangle": nonpositively curved triangle-of-groups splitting (v = 2).
  // "product": v >= 9 forces a direct-product splitting acting on E^v.
  // "conjectural": 3 <= v <= 8, splitting constructed but curvature open.
  std::string basis;
  std::optional<int> v;
  std::optional<GenSet> witness;  // S' of the splitting
  std::optional<SimplexOfGroups> splitting;
  std::optional<CurvatureReport> curvature;  // present when v = 2
};

FaVerdict fa_verdict(const CoxeterSystem& sys, int n);

// Maximal (n+1)-spherical subsets plus whether the maximality claim is
// unconditional (it is for n <= 2, and whenever no special subgroup has
// 3 <= v <= min(n, 8)).
struct MaxFaResult {
  std::vector<GenSet> subsets;
  bool unconditional = true;
};

MaxFaResult maximal_fa_subgroups(const CoxeterSystem& sys, int n);

}  // namespace cox
