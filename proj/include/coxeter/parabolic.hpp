#pragma once

#include "coxeter/words.hpp"

namespace cox {

// W_T intersect W_U = <T intersect U>.
GenSet special_intersection(const CoxeterSystem& sys, const GenSet& T, const GenSet& U);

// W_T intersect w W_U w^-1 = a <core> a^-1, where w = a d y with d the
// (T,U)-reduced element and core = {s in T : d^-1 s d is a letter of U}.
// Core generators are indices into S.
struct ParabolicIntersection {
  GroupElement conjugator;  // a
  GenSet core;
};

ParabolicIntersection parabolic_intersection(const CoxeterSystem& sys, const GenSet& T,
                                             const GenSet& U, const Word& w,
                                             long cap = kDefaultClosureCap);

// Whether W_T is contained in w W_U w^-1: every t in T must conjugate by d
// into a letter of U.
bool parabolic_inclusion(const CoxeterSystem& sys, const GenSet& T, const GenSet& U,
                         const Word& w, long cap = kDefaultClosureCap);

}  // namespace cox
