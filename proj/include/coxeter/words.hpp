#pragma once

#include <string>
#include <vector>

#include "coxeter/system.hpp"

namespace cox {

// A word in the generators, as a sequence of indices. Possibly empty.
using Word = std::vector<int>;

inline constexpr long kDefaultClosureCap = 1'000'000;

// ShortLex: shorter first, then lexicographic by generator index.
bool shortlex_less(const Word& a, const Word& b);

// A group element, held as its canonical word: the ShortLex-minimal reduced
// expression. Construct via reduce()/multiply()/... or from_canonical() when
// the caller already has a canonical word in hand.
class GroupElement {
 public:
  GroupElement() = default;  // identity
  static GroupElement from_canonical(Word w) {
    GroupElement g;
    g.word_ = std::move(w);
    return g;
  }

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return shortlex_less(word_, o.word_); }

 private:
  Word word_;
};

// --- serialization ---------------------------------------------------------

// Whitespace-separated generator names; the empty word renders as "e".
std::string format_word(const CoxeterSystem& sys, const Word& w);
Word parse_word(const CoxeterSystem& sys, const std::string& text);

// --- elementary operations -------------------------------------------------

// All words reachable from w by braid replacements only (swap an alternating
// run sts... of length m_st for tst...). Every member has |w| letters. Sorted
// ShortLex. Throws CapExceeded once the set would exceed `cap`.
std::vector<Word> type2_closure(const CoxeterSystem& sys, const Word& w,
                                long cap = kDefaultClosureCap);

// Canonical form. Each letter is folded onto a canonical prefix: take the
// braid closure of prefix+letter; while some member has an adjacent equal
// pair, delete the pair and start over; once no member has one the word is
// reduced and the ShortLex-least closure member is the new prefix. Folding
// keeps every explored braid class small even for long unreduced input.
GroupElement reduce(const CoxeterSystem& sys, const Word& w, long cap = kDefaultClosureCap);

bool equal(const CoxeterSystem& sys, const Word& a, const Word& b,
           long cap = kDefaultClosureCap);
int length(const CoxeterSystem& sys, const Word& w, long cap = kDefaultClosureCap);
GroupElement multiply(const CoxeterSystem& sys, const GroupElement& g,
                      const GroupElement& h, long cap = kDefaultClosureCap);
// Generators are involutions, so the inverse is the reversed word.
GroupElement inverse(const CoxeterSystem& sys, const GroupElement& g,
                     long cap = kDefaultClosureCap);

// {s : l(sg) < l(g)} and {s : l(gs) < l(g)}.
GenSet left_descents(const CoxeterSystem& sys, const GroupElement& g,
                     long cap = kDefaultClosureCap);
GenSet right_descents(const CoxeterSystem& sys, const GroupElement& g,
                      long cap = kDefaultClosureCap);

// w = x d y with x in W_T, y in W_U, d the unique minimal-length element of
// the double coset W_T w W_U, and l(w) = l(x) + l(d) + l(y).
struct DoubleCosetDecomposition {
  GroupElement x;
  GroupElement d;
  GroupElement y;
};

// Greedy strip: repeatedly remove the least-index T-left-descent, then the
// least-index U-right-descent. The resulting d is independent of the order.
DoubleCosetDecomposition double_coset_reduce(const CoxeterSystem& sys, const GenSet& T,
                                             const GenSet& U, const Word& w,
                                             long cap = kDefaultClosureCap);

// Minimal number of blocks partitioning w into runs drawn alternately from
// partA and partB; letters in both sides may join either block. Throws
// InvalidArgument if a letter lies outside partA | partB.
int alt_length(const GenSet& partA, const GenSet& partB, const Word& w);

}  // namespace cox
