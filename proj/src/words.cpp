#include "coxeter/words.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace cox {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string format_word(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << sys.name(w[i]);
  }
  return out.str();
}

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "e") continue;  // identity letter; contributes nothing
    int i = sys.index_of(tok);
    if (i < 0) throw InvalidArgument("unknown generator name: " + tok);
    w.push_back(i);
  }
  return w;
}

namespace {

// Appends s,t,s,... of length len starting with `first`.
void append_alternating(Word& out, int first, int second, int len) {
  for (int k = 0; k < len; ++k) out.push_back(k % 2 == 0 ? first : second);
}

// Braid neighbors of w: for each position and each pair (s,t) with finite
// m_st >= 2, if sts... of length m_st starts here, swap it for tst...
void braid_neighbors(const CoxeterSystem& sys, const Word& w, std::vector<Word>& out) {
  const int n = static_cast<int>(w.size());
  for (int pos = 0; pos < n; ++pos) {
    int s = w[pos];
    if (pos + 1 >= n) break;
    int t = w[pos + 1];
    if (t == s) continue;  // braid runs alternate; ss is Type (I) territory
    MValue mv = sys.m(s, t);
    if (mv.is_inf()) continue;
    int m = static_cast<int>(mv.value());
    if (pos + m > n) continue;
    bool run = true;
    for (int k = 2; k < m; ++k)
      if (w[pos + k] != (k % 2 == 0 ? s : t)) {
        run = false;
        break;
      }
    if (!run) continue;
    Word nb(w.begin(), w.begin() + pos);
    append_alternating(nb, t, s, m);
    nb.insert(nb.end(), w.begin() + pos + m, w.end());
    out.push_back(std::move(nb));
  }
}

bool find_adjacent_pair(const Word& w, int* pos) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) {
      *pos = static_cast<int>(i);
      return true;
    }
  return false;
}

// Type-II closure BFS. With stop_at_pair set, the walk aborts as soon as a
// member exposes an adjacent equal pair (reported through *reducible); the
// materialized closure is then partial, which reduce() is free to exploit
// since any exposed pair may be deleted first.
std::set<Word> braid_closure(const CoxeterSystem& sys, const Word& w, long cap,
                             bool stop_at_pair, std::optional<Word>* reducible) {
  for (int s : w)
    if (s < 0 || s >= sys.rank()) throw InvalidArgument("letter out of range");
  if (reducible) reducible->reset();
  std::set<Word> seen{w};
  int pos;
  if (stop_at_pair && find_adjacent_pair(w, &pos)) {
    *reducible = w;
    return seen;
  }
  std::vector<Word> queue{w};
  std::vector<Word> scratch;
  while (!queue.empty()) {
    Word cur = std::move(queue.back());
    queue.pop_back();
    scratch.clear();
    braid_neighbors(sys, cur, scratch);
    for (auto& nb : scratch) {
      if (seen.count(nb)) continue;
      if (static_cast<long>(seen.size()) >= cap)
        throw CapExceeded("closure too large (cap " + std::to_string(cap) + " words)");
      if (stop_at_pair && find_adjacent_pair(nb, &pos)) {
        *reducible = nb;
        return seen;
      }
      queue.push_back(nb);
      seen.insert(std::move(nb));
    }
  }
  return seen;
}

}  // namespace

std::vector<Word> type2_closure(const CoxeterSystem& sys, const Word& w, long cap) {
  std::set<Word> seen = braid_closure(sys, w, cap, false, nullptr);
  return std::vector<Word>(seen.begin(), seen.end());  // set order = ShortLex within equal length
}

namespace {

// Canonical form of `cur`, where cur is at most one deletion away from
// reduced (a canonical word with one letter appended, or any word during the
// deletion cascade below).
Word reduce_step(const CoxeterSystem& sys, Word cur, long cap) {
  for (;;) {
    std::optional<Word> reducible;
    std::set<Word> closure = braid_closure(sys, cur, cap, true, &reducible);
    if (reducible) {
      int pos;
      find_adjacent_pair(*reducible, &pos);
      Word shorter;
      shorter.reserve(reducible->size() - 2);
      shorter.insert(shorter.end(), reducible->begin(), reducible->begin() + pos);
      shorter.insert(shorter.end(), reducible->begin() + pos + 2, reducible->end());
      cur = std::move(shorter);
      continue;
    }
    // No member admits a Type (I) deletion: cur is reduced. All reduced
    // expressions of the element lie in this closure, so the ShortLex
    // minimum is the canonical form.
    return *std::min_element(closure.begin(), closure.end(), shortlex_less);
  }
}

}  // namespace

GroupElement reduce(const CoxeterSystem& sys, const Word& w, long cap) {
  // Fold the word letter by letter, keeping the running prefix canonical.
  // Appending one letter to a reduced word leaves a braid class that is
  // small either way (the reduced expressions of the longer element, or the
  // once-redundant expressions of the shorter one), so garbage input never
  // forces a walk of the full braid class of a long unreduced word.
  Word acc;
  for (int s : w) {
    if (s < 0 || s >= sys.rank()) throw InvalidArgument("letter out of range");
    acc.push_back(s);
    acc = reduce_step(sys, std::move(acc), cap);
  }
  return GroupElement::from_canonical(std::move(acc));
}

bool equal(const CoxeterSystem& sys, const Word& a, const Word& b, long cap) {
  return reduce(sys, a, cap) == reduce(sys, b, cap);
}

int length(const CoxeterSystem& sys, const Word& w, long cap) {
  return reduce(sys, w, cap).length();
}

GroupElement multiply(const CoxeterSystem& sys, const GroupElement& g,
                      const GroupElement& h, long cap) {
  Word w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return reduce(sys, w, cap);
}

GroupElement inverse(const CoxeterSystem& sys, const GroupElement& g, long cap) {
  Word w(g.word().rbegin(), g.word().rend());
  return reduce(sys, w, cap);
}

// l(sg) < l(g) exactly when some reduced expression of g starts with s, and
// the closure of the canonical word holds every reduced expression.
GenSet left_descents(const CoxeterSystem& sys, const GroupElement& g, long cap) {
  GenSet out;
  for (const Word& member : type2_closure(sys, g.word(), cap))
    if (!member.empty()) out.add(member.front());
  return out;
}

GenSet right_descents(const CoxeterSystem& sys, const GroupElement& g, long cap) {
  GenSet out;
  for (const Word& member : type2_closure(sys, g.word(), cap))
    if (!member.empty()) out.add(member.back());
  return out;
}

DoubleCosetDecomposition double_coset_reduce(const CoxeterSystem& sys, const GenSet& T,
                                             const GenSet& U, const Word& w, long cap) {
  check_subset(sys, T);
  check_subset(sys, U);
  GroupElement d = reduce(sys, w, cap);
  Word x_letters, y_letters;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    // one closure per strip: a reduced expression starting (ending) with a
    // letter of T (U) witnesses the descent and hands us the shortened word
    std::vector<Word> closure = type2_closure(sys, d.word(), cap);
    int best = -1;
    const Word* witness = nullptr;
    for (const Word& member : closure) {
      if (member.empty()) break;
      int t = member.front();
      if (T.contains(t) && (best < 0 || t < best)) {  // least-index descent
        best = t;
        witness = &member;
      }
    }
    if (witness) {
      x_letters.push_back(best);
      d = reduce(sys, Word(witness->begin() + 1, witness->end()), cap);
      stripped = true;
      continue;
    }
    for (const Word& member : closure) {
      if (member.empty()) break;
      int u = member.back();
      if (U.contains(u) && (best < 0 || u < best)) {
        best = u;
        witness = &member;
      }
    }
    if (witness) {
      y_letters.insert(y_letters.begin(), best);
      d = reduce(sys, Word(witness->begin(), witness->end() - 1), cap);
      stripped = true;
    }
  }
  return DoubleCosetDecomposition{reduce(sys, x_letters, cap), d, reduce(sys, y_letters, cap)};
}

int alt_length(const GenSet& partA, const GenSet& partB, const Word& w) {
  const GenSet cover = partA | partB;
  constexpr int inf = std::numeric_limits<int>::max() / 2;
  // blocks used so far, by the side of the current block
  int inA = inf, inB = inf;
  bool first = true;
  for (int s : w) {
    if (!cover.contains(s)) throw InvalidArgument("letter outside partA and partB");
    int nextA = inf, nextB = inf;
    if (partA.contains(s)) nextA = first ? 1 : std::min(inA, inB + 1);
    if (partB.contains(s)) nextB = first ? 1 : std::min(inB, inA + 1);
    inA = nextA;
    inB = nextB;
    first = false;
  }
  return first ? 0 : std::min(inA, inB);
}

}  // namespace cox
