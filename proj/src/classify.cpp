#include "coxeter/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace cox {

std::string TypeLabel::str() const {
  switch (kind) {
    case Kind::Finite:
      return "Finite(" + family + ")";
    case Kind::Affine:
      return "Affine(" + family + ")";
    case Kind::CompactHyperbolic:
      return "CompactHyperbolic(rank " + std::to_string(rank) + ")";
    case Kind::OtherInfinite:
      return "OtherInfinite(rank " + std::to_string(rank) + ")";
  }
  return {};
}

namespace {

// Edge-labeled graphs as symmetric m-value matrices, used for the template
// diagrams. Entry 2 means "no edge".
struct Diagram {
  int n = 0;
  std::vector<MValue> m;

  explicit Diagram(int size) : n(size), m(size * size, MValue::finite(2)) {
    for (int i = 0; i < size; ++i) m[i * size + i] = MValue::finite(1);
  }
  MValue at(int i, int j) const { return m[i * n + j]; }
  void edge(int i, int j, std::uint32_t label) {
    m[i * n + j] = MValue::finite(label);
    m[j * n + i] = MValue::finite(label);
  }
  void edge_inf(int i, int j) {
    m[i * n + j] = MValue::inf();
    m[j * n + i] = MValue::inf();
  }
};

Diagram diagram_of(const CoxeterSystem& sys) {
  Diagram d(sys.rank());
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j) d.m[i * d.n + j] = sys.m(i, j);
  return d;
}

// Sorted incident labels (inf encoded above every finite value), the
// fingerprint used to prune the isomorphism search.
std::vector<std::uint64_t> vertex_profile(const Diagram& d, int v) {
  std::vector<std::uint64_t> p;
  for (int j = 0; j < d.n; ++j) {
    if (j == v) continue;
    MValue m = d.at(v, j);
    if (m == MValue::finite(2)) continue;
    p.push_back(m.is_finite() ? m.value() : ~0ull);
  }
  std::sort(p.begin(), p.end());
  return p;
}

bool extend(const Diagram& a, const Diagram& b, std::vector<int>& map,
            std::vector<bool>& used, const std::vector<std::vector<int>>& cand, int v) {
  if (v == a.n) return true;
  for (int w : cand[v]) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = a.at(v, u) == b.at(w, map[u]);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(a, b, map, used, cand, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

// Labeled-graph isomorphism by backtracking over profile-compatible vertices.
bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.n != b.n) return false;
  std::vector<std::vector<std::uint64_t>> pa(a.n), pb(b.n);
  for (int v = 0; v < a.n; ++v) pa[v] = vertex_profile(a, v);
  for (int w = 0; w < b.n; ++w) pb[w] = vertex_profile(b, w);
  std::vector<std::vector<int>> cand(a.n);
  for (int v = 0; v < a.n; ++v) {
    for (int w = 0; w < b.n; ++w)
      if (pa[v] == pb[w]) cand[v].push_back(w);
    if (cand[v].empty()) return false;
  }
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return extend(a, b, map, used, cand, 0);
}

Diagram path_diagram(const std::vector<std::uint32_t>& labels) {
  Diagram d(static_cast<int>(labels.size()) + 1);
  for (size_t i = 0; i < labels.size(); ++i)
    d.edge(static_cast<int>(i), static_cast<int>(i + 1), labels[i]);
  return d;
}

// --- the standard lists ----------------------------------------------------

struct FiniteMatch {
  std::string family;
  BigInt order;
};

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow2(int n) {
  BigInt p = 1;
  p <<= n;
  return p;
}

// Match an irreducible diagram of rank >= 1 against the finite templates.
std::optional<FiniteMatch> match_finite(const Diagram& d) {
  const int r = d.n;
  if (r == 1) return FiniteMatch{"A1", 2};
  if (r == 2) {
    MValue m = d.at(0, 1);
    if (!m.is_finite()) return std::nullopt;  // irreducible rank 2 has m >= 3
    return FiniteMatch{"I2(" + std::to_string(m.value()) + ")", BigInt(2) * m.value()};
  }

  auto path = [&](std::vector<std::uint32_t> labels) {
    return isomorphic(d, path_diagram(labels));
  };

  // A_r
  if (path(std::vector<std::uint32_t>(r - 1, 3)))
    return FiniteMatch{"A" + std::to_string(r), factorial(r + 1)};
  // B_r
  {
    std::vector<std::uint32_t> labels(r - 1, 3);
    labels[0] = 4;
    if (path(labels)) return FiniteMatch{"B" + std::to_string(r), pow2(r) * factorial(r)};
  }
  // D_r
  if (r >= 4) {
    Diagram t(r);
    t.edge(0, 2, 3);
    t.edge(1, 2, 3);
    for (int i = 2; i + 1 < r; ++i) t.edge(i, i + 1, 3);
    if (isomorphic(d, t))
      return FiniteMatch{"D" + std::to_string(r), pow2(r - 1) * factorial(r)};
  }
  if (r == 3 && path({5, 3})) return FiniteMatch{"H3", 120};
  if (r == 4 && path({5, 3, 3})) return FiniteMatch{"H4", 14400};
  if (r == 4 && path({3, 4, 3})) return FiniteMatch{"F4", 1152};
  if (r >= 6 && r <= 8) {
    Diagram t(r);
    for (int i = 0; i + 2 < r; ++i) t.edge(i, i + 1, 3);
    t.edge(2, r - 1, 3);  // branch of length 1 at the third node
    if (isomorphic(d, t)) {
      if (r == 6) return FiniteMatch{"E6", 51840};
      if (r == 7) return FiniteMatch{"E7", 2903040};
      return FiniteMatch{"E8", 696729600};
    }
  }
  return std::nullopt;
}

// Match an irreducible diagram against the affine templates; returns the
// family string.
std::optional<std::string> match_affine(const Diagram& d) {
  const int r = d.n;
  if (r == 2) {
    if (d.at(0, 1).is_inf()) return "~A1";
    return std::nullopt;
  }
  auto path = [&](std::vector<std::uint32_t> labels) {
    return isomorphic(d, path_diagram(labels));
  };

  if (r >= 3) {  // ~A_{r-1}: a cycle
    Diagram t(r);
    for (int i = 0; i < r; ++i) t.edge(i, (i + 1) % r, 3);
    if (isomorphic(d, t)) return "~A" + std::to_string(r - 1);
  }
  if (r >= 3) {  // ~C_{r-1}: 4 at both ends
    std::vector<std::uint32_t> labels(r - 1, 3);
    labels.front() = 4;
    labels.back() = 4;
    if (path(labels)) return "~C" + std::to_string(r - 1);
  }
  if (r >= 4) {  // ~B_{r-1}: fork at one end, 4 at the other
    Diagram t(r);
    t.edge(0, 2, 3);
    t.edge(1, 2, 3);
    for (int i = 2; i + 2 < r; ++i) t.edge(i, i + 1, 3);
    t.edge(r - 2, r - 1, 4);
    if (isomorphic(d, t)) return "~B" + std::to_string(r - 1);
  }
  if (r >= 5) {  // ~D_{r-1}: forks at both ends
    Diagram t(r);
    t.edge(0, 2, 3);
    t.edge(1, 2, 3);
    for (int i = 2; i + 2 < r; ++i) t.edge(i, i + 1, 3);
    t.edge(r - 3, r - 1, 3);
    if (isomorphic(d, t)) return "~D" + std::to_string(r - 1);
  }
  if (r == 3 && path({3, 6})) return "~G2";
  if (r == 5 && path({3, 3, 4, 3})) return "~F4";
  if (r == 7) {  // ~E6: three branches of length 2
    Diagram t(7);
    t.edge(0, 1, 3);
    t.edge(1, 2, 3);
    t.edge(2, 3, 3);
    t.edge(3, 4, 3);
    t.edge(2, 5, 3);
    t.edge(5, 6, 3);
    if (isomorphic(d, t)) return "~E6";
  }
  if (r == 8) {  // ~E7: branches 1, 3, 3
    Diagram t(8);
    for (int i = 0; i + 1 < 7; ++i) t.edge(i, i + 1, 3);
    t.edge(3, 7, 3);
    if (isomorphic(d, t)) return "~E7";
  }
  if (r == 9) {  // ~E8: branches 1, 2, 5
    Diagram t(9);
    for (int i = 0; i + 1 < 8; ++i) t.edge(i, i + 1, 3);
    t.edge(2, 8, 3);
    if (isomorphic(d, t)) return "~E8";
  }
  return std::nullopt;
}

}  // namespace

bool is_finite(const CoxeterSystem& sys, const GenSet& T) {
  for (const GenSet& comp : components(sys, T))
    if (!match_finite(diagram_of(induced_subsystem(sys, comp)))) return false;
  return true;
}

std::optional<BigInt> order(const CoxeterSystem& sys, const GenSet& T) {
  BigInt total = 1;
  for (const GenSet& comp : components(sys, T)) {
    auto match = match_finite(diagram_of(induced_subsystem(sys, comp)));
    if (!match) return std::nullopt;
    total *= match->order;
  }
  return total;
}

TypeLabel recognize_irreducible(const CoxeterSystem& sys) {
  if (sys.rank() == 0) throw InvalidArgument("empty system is not irreducible");
  if (components(sys, GenSet::all(sys.rank())).size() != 1)
    throw InvalidArgument("system is not irreducible");

  Diagram d = diagram_of(sys);
  if (auto fin = match_finite(d))
    return TypeLabel{TypeLabel::Kind::Finite, fin->family, sys.rank()};
  if (auto aff = match_affine(d))
    return TypeLabel{TypeLabel::Kind::Affine, *aff, sys.rank()};

  const GenSet all = GenSet::all(sys.rank());
  bool proper_all_finite = true;
  for (int i = 0; i < sys.rank() && proper_all_finite; ++i)
    proper_all_finite = is_finite(sys, all.without(i));
  if (proper_all_finite)
    return TypeLabel{TypeLabel::Kind::CompactHyperbolic, "", sys.rank()};
  return TypeLabel{TypeLabel::Kind::OtherInfinite, "", sys.rank()};
}

std::vector<GenSet> subsets_of_size(int n, int size) {
  std::vector<GenSet> out;
  if (size < 0 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    GenSet s;
    for (int i : idx) s.add(i);
    out.push_back(s);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == n - size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

namespace {

// Memoized finiteness per subset, for the subset sweeps below.
class FinitenessCache {
 public:
  explicit FinitenessCache(const CoxeterSystem& sys) : sys_(sys) {}
  bool finite(const GenSet& T) {
    auto [it, fresh] = memo_.try_emplace(T.bits(), false);
    if (fresh) it->second = is_finite(sys_, T);
    return it->second;
  }

 private:
  const CoxeterSystem& sys_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

// All rank-min(k,|T|) subsets of T finite? (Sufficient for k-sphericity of
// (W_T, T), since supersets of an infinite subgroup are infinite.)
bool spherical_within(FinitenessCache& cache, const GenSet& T, int k) {
  const int r = std::min(k, T.size());
  if (r <= 0) return true;
  auto idx = T.indices();
  for (const GenSet& pattern : subsets_of_size(static_cast<int>(idx.size()), r)) {
    GenSet sub;
    for (int i : pattern.indices()) sub.add(idx[i]);
    if (!cache.finite(sub)) return false;
  }
  return true;
}

}  // namespace

bool subset_is_k_spherical(const CoxeterSystem& sys, const GenSet& T, int k) {
  check_subset(sys, T);
  FinitenessCache cache(sys);
  return spherical_within(cache, T, k);
}

SphericityReport is_k_spherical(const CoxeterSystem& sys, int k) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  if (sys.rank() > 20) throw CapExceeded("rank too large for the subset sweep");
  FinitenessCache cache(sys);
  SphericityReport report;
  report.k = k;
  report.holds = spherical_within(cache, GenSet::all(sys.rank()), k);
  if (!report.holds) {
    // minimal-rank infinite witness; rank-1 subgroups are always finite
    const int top = std::min(k, sys.rank());
    for (int r = 2; r <= top && !report.witness; ++r)
      for (const GenSet& T : subsets_of_size(sys.rank(), r))
        if (!cache.finite(T)) {
          report.witness = T;
          break;
        }
  }
  return report;
}

std::optional<int> v_of(const CoxeterSystem& sys) {
  if (sys.rank() > 20) throw CapExceeded("rank too large for the subset sweep");
  FinitenessCache cache(sys);
  const GenSet all = GenSet::all(sys.rank());
  if (cache.finite(all)) return std::nullopt;  // finite W is m-spherical for every m
  int v = 1;
  while (spherical_within(cache, all, v + 1)) ++v;
  return v;
}

GramSignature gram_signature_oracle(const CoxeterSystem& sys, const GenSet& T) {
  check_subset(sys, T);
  auto idx = T.indices();
  const int n = static_cast<int>(idx.size());
  if (n == 0) return GramSignature::PositiveDefinite;
  Eigen::MatrixXd B(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) {
        B(a, b) = 1.0;
      } else {
        MValue m = sys.m(idx[a], idx[b]);
        B(a, b) = m.is_finite() ? -std::cos(M_PI / m.value()) : -1.0;
      }
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B);
  constexpr double kZeroBand = 1e-12;  // numerically-zero eigenvalues land well below this
  constexpr double kSignTol = 1e-9;
  bool any_zero = false, any_negative = false;
  for (int i = 0; i < n; ++i) {
    double ev = solver.eigenvalues()(i);
    if (std::abs(ev) <= kZeroBand)
      any_zero = true;
    else if (ev <= -kSignTol)
      any_negative = true;
    else if (ev < kSignTol)
      return GramSignature::Inconclusive;  // gray band: defer to template match
  }
  if (any_negative) return GramSignature::Indefinite;
  if (any_zero) return GramSignature::PositiveSemidefiniteSingular;
  return GramSignature::PositiveDefinite;
}

std::vector<GenSet> maximal_spherical_subsets(const CoxeterSystem& sys, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  FinitenessCache cache(sys);
  const int rank = sys.rank();
  if (rank > 20) throw CapExceeded("rank too large for the subset sweep");
  std::vector<bool> spherical(1u << rank);
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits)
    spherical[bits] = spherical_within(cache, GenSet::from_bits(bits), n + 1);

  std::vector<GenSet> out;
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
    if (!spherical[bits]) continue;
    bool maximal = true;
    for (int i = 0; i < rank && maximal; ++i)
      if (!(bits >> i & 1u) && spherical[bits | (1u << i)]) maximal = false;
    if (maximal) out.push_back(GenSet::from_bits(bits));
  }
  std::sort(out.begin(), out.end(), GenSet::order_before);
  return out;
}

}  // namespace cox
