#pragma once

#include <vector>

#include "coxeter/words.hpp"

namespace cox {

// Breadth-first closure of {1} under right multiplication by T. Elements come
// back as canonical forms in ShortLex order. Throws CapExceeded with
// "group larger than cap (possibly infinite)" once more than `cap` elements
// appear; hitting the cap is not a proof of infiniteness.
//
// Internally this walks an exact-arithmetic copy of the geometric reflection
// representation, so it is independent of the rewriting path in reduce().
std::vector<GroupElement> enumerate_group(const CoxeterSystem& sys, const GenSet& T,
                                          long cap);

// Enumeration plus the right-multiplication table: next[i][s] is the index of
// elements[i] * s for s in T (entries for s outside T are -1). The transition
// table turns words into element indices in linear time, which is what the
// test oracles want.
struct CayleyTable {
  std::vector<GroupElement> elements;  // ShortLex order; index 0 is the identity
  std::vector<std::vector<int>> next;  // [element][generator]

  int follow(const Word& w) const;  // element index of a word over T
};

CayleyTable enumerate_group_table(const CoxeterSystem& sys, const GenSet& T, long cap);

}  // namespace cox
