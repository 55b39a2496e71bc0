#include "coxeter/angles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "coxeter/classify.hpp"
#include "coxeter/enumerate.hpp"

namespace cox {

Angle gs_angle_formula(const CoxeterSystem& sys, const GenSet& T, const GenSet& U) {
  check_subset(sys, T);
  check_subset(sys, U);
  if (T == U) throw InvalidArgument("angle requires two distinct special subgroups");
  if (T.subset_of(U) || U.subset_of(T)) return Angle::zero();
  std::uint32_t best = 0;  // 0 = nothing finite yet
  for (int i : (T - U).indices())
    for (int j : (U - T).indices()) {
      MValue m = sys.m(i, j);
      if (!m.is_finite()) continue;
      if (best == 0 || m.value() < best) best = m.value();
    }
  // every relevant label infinite: pi/inf means 0
  if (best == 0) return Angle::zero();
  return Angle::pi_over(static_cast<int>(best));
}

namespace {

// Index of the minimal element of the left coset (elements[id]) W_T, by
// greedy right descent through the transition table.
int left_coset_rep(const CayleyTable& table, int id, const GenSet& T) {
  for (;;) {
    bool moved = false;
    for (int t : T.indices()) {
      int next = table.next[id][t];
      if (table.elements[next].length() < table.elements[id].length()) {
        id = next;
        moved = true;
        break;
      }
    }
    if (!moved) return id;
  }
}

int girth(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(num_vertices);  // (neighbor, edge id)
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, static_cast<int>(e));
    adj[edges[e].second].emplace_back(edges[e].first, static_cast<int>(e));
  }
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  int best = inf;
  std::vector<int> dist(num_vertices), parent_edge(num_vertices);
  std::vector<int> queue;
  for (int root = 0; root < num_vertices; ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    queue.assign(1, root);
    dist[root] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (2 * dist[u] >= best) continue;  // no shorter cycle through here
      for (auto [w, e] : adj[u]) {
        if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else if (e != parent_edge[u] && e != parent_edge[w]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == inf ? 0 : best;  // 0 = acyclic
}

}  // namespace

Angle gs_angle_oracle(const CoxeterSystem& sys, const GenSet& T, const GenSet& U,
                      long enum_cap) {
  check_subset(sys, T);
  check_subset(sys, U);
  if (T == U) throw InvalidArgument("angle requires two distinct special subgroups");
  CayleyTable table;
  try {
    table = enumerate_group_table(sys, T | U, enum_cap);
  } catch (const CapExceeded&) {
    throw CapExceeded("oracle infeasible: <T u U> larger than cap");
  }

  const GenSet K = T & U;
  std::map<std::pair<int, int>, int> vertex_id;  // (rep element, side)
  std::vector<std::pair<int, int>> edges;
  std::map<int, std::pair<int, int>> edge_of_kcoset;

  auto vertex = [&](int rep, int side) {
    auto [it, fresh] =
        vertex_id.try_emplace(std::make_pair(rep, side), static_cast<int>(vertex_id.size()));
    return it->second;
  };

  for (int id = 0; id < static_cast<int>(table.elements.size()); ++id) {
    int krep = left_coset_rep(table, id, K);
    if (edge_of_kcoset.count(krep)) continue;
    int vt = vertex(left_coset_rep(table, id, T), 0);
    int vu = vertex(left_coset_rep(table, id, U), 1);
    edge_of_kcoset.emplace(krep, std::make_pair(vt, vu));
  }
  edges.reserve(edge_of_kcoset.size());
  for (const auto& [rep, e] : edge_of_kcoset) edges.push_back(e);

  int g = girth(static_cast<int>(vertex_id.size()), edges);
  if (g == 0) return Angle::zero();
  // loops in the coset graph are even; pi/m = 2*pi/girth
  return Angle::pi_over(g / 2);
}

// --- v-splittings -----------------------------------------------------------

namespace {

std::vector<GenSet> proper_subsets_sorted(const GenSet& sprime) {
  std::vector<GenSet> subs;
  auto idx = sprime.indices();
  const int k = static_cast<int>(idx.size());
  for (std::uint32_t bits = 0; bits + 1 < (1u << k); ++bits) {
    GenSet a;
    for (int i = 0; i < k; ++i)
      if (bits >> i & 1u) a.add(idx[i]);
    subs.push_back(a);
  }
  std::sort(subs.begin(), subs.end(), [](const GenSet& a, const GenSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();  // vertices first
    return GenSet::order_before(a, b);
  });
  return subs;
}

void check_colimit_conditions(const CoxeterSystem& sys,
                              const std::vector<std::pair<GenSet, GenSet>>& faces) {
  // (i) faces whose local group contains s form a nonempty connected
  // subcomplex; comparability-connectivity suffices for this face family.
  for (int s = 0; s < sys.rank(); ++s) {
    std::vector<int> holding;
    for (size_t f = 0; f < faces.size(); ++f)
      if (faces[f].second.contains(s)) holding.push_back(static_cast<int>(f));
    if (holding.empty()) throw std::logic_error("colimit condition (i): empty face set");
    std::vector<bool> reached(holding.size(), false);
    std::vector<size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (size_t other = 0; other < holding.size(); ++other) {
        if (reached[other]) continue;
        const GenSet& a = faces[holding[cur]].first;
        const GenSet& b = faces[holding[other]].first;
        if (a.subset_of(b) || b.subset_of(a)) {
          reached[other] = true;
          stack.push_back(other);
        }
      }
    }
    for (bool r : reached)
      if (!r) throw std::logic_error("colimit condition (i): disconnected face set");
  }
  // (ii) every finite label pair co-resides in some local group.
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t) {
      if (!sys.m(s, t).is_finite()) continue;
      bool housed = false;
      for (const auto& [a, local] : faces)
        if (local.contains(s) && local.contains(t)) {
          housed = true;
          break;
        }
      if (!housed) throw std::logic_error("colimit condition (ii): label pair unhoused");
    }
}

}  // namespace

SimplexOfGroups v_splitting(const CoxeterSystem& sys, const GenSet& sprime) {
  check_subset(sys, sprime);
  auto v = v_of(sys);
  if (!v) throw InvalidArgument("v-splitting requires an infinite group");
  if (sprime.size() != *v + 1)
    throw InvalidArgument("S' must have rank v(W)+1 = " + std::to_string(*v + 1));
  if (is_finite(sys, sprime)) throw InvalidArgument("<S'> must be infinite");
  for (int i : sprime.indices())
    if (!is_finite(sys, sprime.without(i)))
      throw InvalidArgument("every proper subset of S' must generate a finite group");

  // <S'> is irreducible Euclidean or compact hyperbolic by the classification
  // of minimal infinite systems.
  TypeLabel label = recognize_irreducible(induced_subsystem(sys, sprime));
  SimplexOfGroups out;
  out.ambient = sys;
  out.sprime = sprime;
  out.v = *v;
  switch (label.kind) {
    case TypeLabel::Kind::Affine:
      out.metric = SimplexOfGroups::Metric::Euclidean;
      break;
    case TypeLabel::Kind::CompactHyperbolic:
      out.metric = SimplexOfGroups::Metric::Hyperbolic;
      break;
    default:
      throw std::logic_error("minimal infinite subsystem recognized as neither affine nor hyperbolic");
  }

  const GenSet rest = GenSet::all(sys.rank()) - sprime;
  for (const GenSet& a : proper_subsets_sorted(sprime)) out.faces.emplace_back(a, a | rest);
  check_colimit_conditions(sys, out.faces);
  return out;
}

std::string PiMultiple::str() const {
  if (num == 0) return "0";
  std::string n = num == 1 ? "pi" : std::to_string(num) + "pi";
  return den == 1 ? n : n + "/" + std::to_string(den);
}

CurvatureReport triangle_curvature(const SimplexOfGroups& splitting) {
  if (splitting.v != 2) throw InvalidArgument("curvature verdicts exist only for triangles (v = 2)");
  const CoxeterSystem& sys = splitting.ambient;
  const GenSet rest = GenSet::all(sys.rank()) - splitting.sprime;

  CurvatureReport report;
  int slot = 0;
  long long num = 0, den = 1;
  for (const auto& [a, local] : splitting.faces) {
    if (a.size() != 2) continue;  // vertex faces carry the angles
    auto pq = a.indices();
    Angle angle = gs_angle_formula(sys, GenSet::single(pq[0]) | rest,
                                   GenSet::single(pq[1]) | rest);
    report.angles[slot++] = angle;
    if (!angle.is_zero()) {
      num = num * angle.m() + den;
      den *= angle.m();
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  std::sort(report.angles.begin(), report.angles.end(), [](const Angle& x, const Angle& y) {
    if (x.is_zero() || y.is_zero()) return y.is_zero() && !x.is_zero();
    return x.m() < y.m();
  });
  report.sum = PiMultiple{num, den};
  if (num > den) throw std::logic_error("triangle angle sum exceeds pi");
  report.compare = num == den ? CurvatureReport::Compare::EqualPi
                              : CurvatureReport::Compare::LessThanPi;
  report.verdict = num == den ? CurvatureReport::Verdict::Cat0
                              : CurvatureReport::Verdict::CatMinus1;
  return report;
}

FaVerdict fa_verdict(const CoxeterSystem& sys, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  FaVerdict verdict;
  verdict.n = n;

  SphericityReport spherical = is_k_spherical(sys, n + 1);
  if (spherical.holds) {
    verdict.status = FaVerdict::Status::Yes;
    verdict.basis = "spherical";
    return verdict;
  }

  // W is infinite here, and v <= n since (n+1)-sphericity failed.
  const int v = *v_of(sys);
  verdict.v = v;

  // lexicographically least infinite rank-(v+1) subset; its proper subsets
  // are finite because W is v-spherical
  GenSet sprime;
  for (const GenSet& T : subsets_of_size(sys.rank(), v + 1))
    if (!is_finite(sys, T)) {
      sprime = T;
      break;
    }
  verdict.witness = sprime;
  verdict.splitting = v_splitting(sys, sprime);
  if (v == 2) verdict.curvature = triangle_curvature(*verdict.splitting);

  if (v <= 2) {
    verdict.status = FaVerdict::Status::No;
    verdict.basis = v == 1 ? "amalgam" : "triangle";
  } else if (v >= 9) {
    verdict.status = FaVerdict::Status::No;
    verdict.basis = "product";
  } else {
    verdict.status = FaVerdict::Status::ConjecturalNo;
    verdict.basis = "conjectural";
  }
  return verdict;
}

MaxFaResult maximal_fa_subgroups(const CoxeterSystem& sys, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  MaxFaResult result;
  result.subsets = maximal_spherical_subsets(sys, n);
  result.unconditional = true;
  if (n <= 2) return result;

  // The maximality transfer is proven when every v-splitting arising from
  // special subgroups has v <= 2 or v >= 9; scan for 3 <= v(W_T) <= min(n, 8).
  const int rank = sys.rank();
  if (rank > 20) throw CapExceeded("rank too large for the subset sweep");
  std::unordered_map<std::uint32_t, bool> finite_memo;
  auto finite = [&](std::uint32_t bits) {
    auto [it, fresh] = finite_memo.try_emplace(bits, false);
    if (fresh) it->second = is_finite(sys, GenSet::from_bits(bits));
    return it->second;
  };
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
    if (finite(bits)) continue;
    // v of the subsystem on T: largest m with every rank-m subset finite
    GenSet T = GenSet::from_bits(bits);
    auto idx = T.indices();
    int v = 0;
    for (int m = 1; m <= T.size(); ++m) {
      bool all_finite = true;
      for (const GenSet& pattern : subsets_of_size(T.size(), m)) {
        GenSet sub;
        for (int i : pattern.indices()) sub.add(idx[i]);
        if (!finite(sub.bits())) {
          all_finite = false;
          break;
        }
      }
      if (!all_finite) break;
      v = m;
    }
    if (v >= 3 && v <= std::min(n, 8)) {
      result.unconditional = false;
      break;
    }
  }
  return result;
}

}  // namespace cox
