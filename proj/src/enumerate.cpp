#include "coxeter/enumerate.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "exact_ring.hpp"

namespace cox {

namespace {

using detail::Int;
using detail::Poly;
using detail::RealCycloRing;

// Ring order: lcm of the finite labels other than 2 and 3 (whose cosines are
// already rational integers).
int ring_order(const CoxeterSystem& sys) {
  long long N = 1;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      MValue m = sys.m(i, j);
      if (!m.is_finite() || m.value() <= 3) continue;
      N = std::lcm(N, static_cast<long long>(m.value()));
      if (N > 100000) throw CapExceeded("labels too large for the enumeration ring");
    }
  return static_cast<int>(N);
}

// Matrices over the ring, flattened row-major. The faithful geometric
// representation: sigma_i(alpha_j) = alpha_j + 2cos(pi/m_ij) alpha_i for
// j != i and sigma_i(alpha_i) = -alpha_i; an infinite label contributes 2.
struct Rep {
  const CoxeterSystem& sys;
  RealCycloRing ring;
  int n;
  std::vector<std::vector<Poly>> gen;  // generator matrices

  explicit Rep(const CoxeterSystem& s) : sys(s), ring(ring_order(s)), n(s.rank()) {
    gen.resize(n);
    for (int i = 0; i < n; ++i) {
      auto& m = gen[i];
      m.assign(n * n, ring.zero());
      for (int j = 0; j < n; ++j) m[j * n + j] = ring.from_int(1);
      m[i * n + i] = ring.from_int(-1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        MValue mv = sys.m(i, j);
        m[i * n + j] = mv.is_finite() ? ring.two_cos_pi_over(static_cast<int>(mv.value()))
                                      : ring.from_int(2);
      }
    }
  }

  std::vector<Poly> identity() const {
    std::vector<Poly> m(n * n, ring.zero());
    for (int j = 0; j < n; ++j) m[j * n + j] = ring.from_int(1);
    return m;
  }

  // a * gen[s]
  std::vector<Poly> mul_gen(const std::vector<Poly>& a, int s) const {
    const auto& b = gen[s];
    std::vector<Poly> out(n * n, ring.zero());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Poly& aik = a[i * n + k];
        if (ring.is_zero(aik)) continue;
        for (int j = 0; j < n; ++j) {
          const Poly& bkj = b[k * n + j];
          if (ring.is_zero(bkj)) continue;
          out[i * n + j] = ring.add(out[i * n + j], ring.mul(aik, bkj));
        }
      }
    return out;
  }
};

// Flat integer key for exact matrix comparison.
std::vector<Int> key_of(const std::vector<Poly>& m) {
  std::vector<Int> key;
  key.reserve(m.size() * m.front().size());
  for (const Poly& p : m) key.insert(key.end(), p.begin(), p.end());
  return key;
}

}  // namespace

int CayleyTable::follow(const Word& w) const {
  int cur = 0;
  for (int s : w) {
    cur = next[cur][s];
    if (cur < 0) throw InvalidArgument("word uses a generator outside T");
  }
  return cur;
}

CayleyTable enumerate_group_table(const CoxeterSystem& sys, const GenSet& T, long cap) {
  check_subset(sys, T);
  if (cap < 1) throw InvalidArgument("cap must be positive");
  Rep rep(sys);

  CayleyTable table;
  std::map<std::vector<Int>, int> index;
  std::vector<std::vector<Poly>> matrices;

  matrices.push_back(rep.identity());
  index.emplace(key_of(matrices[0]), 0);
  table.elements.push_back(GroupElement());
  table.next.emplace_back(sys.rank(), -1);

  // Processing elements in discovery order visits canonical words in ShortLex
  // order, and first discovery of g*s therefore assigns the ShortLex-minimal
  // reduced word (prefixes of canonical words are canonical).
  for (size_t head = 0; head < matrices.size(); ++head) {
    for (int s : T.indices()) {
      if (table.next[head][s] >= 0) continue;
      auto m = rep.mul_gen(matrices[head], s);
      auto key = key_of(m);
      auto it = index.find(key);
      if (it != index.end()) {
        table.next[head][s] = it->second;
        continue;
      }
      if (static_cast<long>(matrices.size()) >= cap)
        throw CapExceeded("group larger than cap (possibly infinite)");
      int id = static_cast<int>(matrices.size());
      matrices.push_back(std::move(m));
      index.emplace(std::move(key), id);
      Word w = table.elements[head].word();
      w.push_back(s);
      table.elements.push_back(GroupElement::from_canonical(std::move(w)));
      table.next.emplace_back(sys.rank(), -1);
      table.next[head][s] = id;
    }
  }
  return table;
}

std::vector<GroupElement> enumerate_group(const CoxeterSystem& sys, const GenSet& T,
                                          long cap) {
  return enumerate_group_table(sys, T, cap).elements;
}

}  // namespace cox
