#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "coxeter/nerve.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cox;
using coxtest::load_system;

namespace {

// Naive elementary row/column reduction: one Euclid step at a time at the
// smallest entry, recursing on the stripped submatrix. Slow and simple, as an
// independent check on the production routine.
std::vector<SnfInt> naive_snf(IntMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (rows == 0 || cols == 0) return {};
  auto abs_of = [](const SnfInt& v) { return v < 0 ? SnfInt(-v) : v; };
  for (;;) {
    int pi = -1, pj = -1;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs_of(a[i][j]) < abs_of(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) return {};  // zero matrix
    std::swap(a[0], a[pi]);
    for (auto& row : a) std::swap(row[0], row[pj]);

    // a single Euclid step somewhere in the pivot cross, if needed
    bool stepped = false;
    for (int i = 1; i < rows && !stepped; ++i)
      if (a[i][0] != 0) {
        SnfInt q = a[i][0] / a[0][0];
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[0][j];
        stepped = true;
      }
    for (int j = 1; j < cols && !stepped; ++j)
      if (a[0][j] != 0) {
        SnfInt q = a[0][j] / a[0][0];
        for (int i = 0; i < rows; ++i) a[i][j] -= q * a[i][0];
        stepped = true;
      }
    if (stepped) continue;

    // cross is clear; fold in a row that breaks divisibility, if any
    bool divides = true;
    for (int i = 1; i < rows && divides; ++i)
      for (int j = 1; j < cols; ++j)
        if (a[i][j] % a[0][0] != 0) {
          for (int jj = 0; jj < cols; ++jj) a[0][jj] += a[i][jj];
          divides = false;
          break;
        }
    if (!divides) continue;

    std::vector<SnfInt> out{abs_of(a[0][0])};
    IntMatrix rest;
    for (int i = 1; i < rows; ++i)
      rest.emplace_back(a[i].begin() + 1, a[i].end());
    for (const SnfInt& d : naive_snf(std::move(rest))) out.push_back(d);
    return out;
  }
}

// k x k minor determinant by cofactor expansion.
SnfInt det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m[rows[0]][cols[0]];
  SnfInt sum = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < k; ++c) {
    std::vector<int> sub_cols;
    for (size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    SnfInt term = m[rows[0]][cols[c]] * det(m, sub_rows, sub_cols);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Invariant factors via determinantal divisors: d_k = gcd(k-minors)/gcd((k-1)-minors).
std::vector<SnfInt> determinantal_snf(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<SnfInt> out;
  SnfInt prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    SnfInt g = 0;
    combinations(rows, k, [&](const std::vector<int>& r) {
      combinations(cols, k, [&](const std::vector<int>& c) {
        SnfInt d = det(m, r, c);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  IntMatrix m(rows, std::vector<SnfInt>(cols));
  for (auto& row : m)
    for (auto& v : row) v = static_cast<int>(rng() % 7) - 3;  // entries in [-3, 3]
  return m;
}

HomologyProfile nerve_homology(const char* file, GenSet T) {
  CoxeterSystem sys = load_system(file);
  return homology(build_nerve(sys, T));
}

}  // namespace

TEST_CASE("smith invariants of fixed matrices") {
  CHECK(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
        std::vector<SnfInt>{2, 2, 156});
  CHECK(smith_invariants({{1, 0}, {0, 1}}) == std::vector<SnfInt>{1, 1});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariants({{6}}) == std::vector<SnfInt>{6});
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<SnfInt>{1, 6});
}

TEST_CASE("smith invariants agree with two independent oracles") {
  std::mt19937 rng(20240818);
  for (int trial = 0; trial < 120; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    IntMatrix m = random_matrix(rng, rows, cols);
    auto fast = smith_invariants(m);
    CHECK(fast == naive_snf(m));
    if (rows <= 6 && cols <= 6) CHECK(fast == determinantal_snf(m));
    for (size_t i = 1; i < fast.size(); ++i) CHECK(fast[i] % fast[i - 1] == 0);
  }
}

TEST_CASE("nerve: finite group gives the full simplex") {
  CoxeterSystem b3 = load_system("b3.cox");
  SimplicialComplex nerve = build_nerve(b3, GenSet::all(3));
  REQUIRE(nerve.facets.size() == 1);
  CHECK(nerve.facets[0] == GenSet::all(3));
  HomologyProfile profile = homology(nerve);
  CHECK(profile.betti == std::vector<long long>{1, 0, 0});
  for (int k = 0; k < 3; ++k) {
    CHECK(!profile.reduced_nonzero(k));
    CHECK(profile.torsion[k].empty());
  }
}

TEST_CASE("nerve: (3,4,6) is the boundary of a triangle") {
  CoxeterSystem tri = load_system("tri346.cox");
  SimplicialComplex nerve = build_nerve(tri, GenSet::all(3));
  REQUIRE(nerve.facets.size() == 3);
  CHECK(nerve.dimension() == 1);
  HomologyProfile profile = homology(nerve);
  CHECK(profile.betti == std::vector<long long>{1, 1});
  CHECK(profile.reduced_betti == std::vector<long long>{0, 1});
  CHECK(profile.torsion[0].empty());
  CHECK(profile.torsion[1].empty());
}

TEST_CASE("nerve: infinite dihedral is two isolated vertices") {
  SimplicialComplex nerve = build_nerve(load_system("i2inf.cox"), GenSet::all(2));
  REQUIRE(nerve.facets.size() == 2);
  CHECK(nerve.dimension() == 0);
  HomologyProfile profile = homology(nerve);
  CHECK(profile.betti == std::vector<long long>{2});
  CHECK(profile.reduced_betti == std::vector<long long>{1});
}

TEST_CASE("nerve monotonicity: subcomplex on sub-T") {
  CoxeterSystem hexa = load_system("hexa.cox");
  GenSet U = GenSet::all(6);
  SimplicialComplex big = build_nerve(hexa, U);
  auto big_simplices = big.simplices_by_dim();
  for (std::uint32_t bits = 0; bits < (1u << 6); ++bits) {
    GenSet T = GenSet::from_bits(bits);
    if (T.size() > 4) continue;
    SimplicialComplex small = build_nerve(hexa, T);
    // every simplex of the small complex is one of the big complex, and every
    // big simplex inside T appears in the small complex
    auto small_simplices = small.simplices_by_dim();
    for (const auto& level : small_simplices)
      for (const GenSet& s : level) {
        bool found = false;
        for (const auto& big_level : big_simplices)
          for (const GenSet& b : big_level) found = found || b == s;
        CHECK(found);
      }
    for (const auto& big_level : big_simplices)
      for (const GenSet& b : big_level) {
        if (!b.subset_of(T)) continue;
        bool found = false;
        for (const auto& level : small_simplices)
          for (const GenSet& s : level) found = found || s == b;
        CHECK(found);
      }
  }
}

TEST_CASE("boundary of boundary vanishes and Euler characteristic matches") {
  for (const char* name : {"b3.cox", "tri346.cox", "hexa.cox", "quad.cox", "affa3.cox"}) {
    CoxeterSystem sys = load_system(name);
    SimplicialComplex nerve = build_nerve(sys, GenSet::all(sys.rank()));
    auto by_dim = nerve.simplices_by_dim();
    for (size_t k = 2; k < by_dim.size(); ++k) {
      IntMatrix d_hi = boundary_matrix(by_dim[k - 1], by_dim[k]);
      IntMatrix d_lo = boundary_matrix(by_dim[k - 2], by_dim[k - 1]);
      for (size_t i = 0; i < d_lo.size(); ++i)
        for (size_t j = 0; j < by_dim[k].size(); ++j) {
          SnfInt sum = 0;
          for (size_t mid = 0; mid < by_dim[k - 1].size(); ++mid)
            sum += d_lo[i][mid] * d_hi[mid][j];
          CHECK(sum == 0);
        }
    }
    HomologyProfile profile = homology(nerve);
    long long euler_from_betti = 0;
    for (size_t k = 0; k < profile.betti.size(); ++k)
      euler_from_betti += (k % 2 == 0 ? 1 : -1) * profile.betti[k];
    CHECK(profile.euler == euler_from_betti);
  }
}

TEST_CASE("homology with torsion: the 6-vertex projective plane") {
  // hemi-icosahedron; not a nerve, but homology() accepts any complex
  SimplicialComplex rp2;
  rp2.vertices = {0, 1, 2, 3, 4, 5};
  for (auto f : std::initializer_list<GenSet>{{0, 1, 2},
                                              {0, 1, 3},
                                              {0, 2, 4},
                                              {0, 3, 5},
                                              {0, 4, 5},
                                              {1, 2, 5},
                                              {1, 3, 4},
                                              {1, 4, 5},
                                              {2, 3, 4},
                                              {2, 3, 5}})
    rp2.facets.push_back(f);
  HomologyProfile h = homology(rp2);
  CHECK(h.simplex_counts == std::vector<long long>{6, 15, 10});
  CHECK(h.euler == 1);
  CHECK(h.betti == std::vector<long long>{1, 0, 0});
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);  // H_1 = Z/2
  CHECK(h.torsion[0].empty());
  CHECK(h.torsion[2].empty());
}

TEST_CASE("homology without torsion: the 7-vertex torus") {
  SimplicialComplex torus;
  torus.vertices = {0, 1, 2, 3, 4, 5, 6};
  // Moebius-Kantor triangulation: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
  for (int i = 0; i < 7; ++i) {
    GenSet f1, f2;
    f1.add(i);
    f1.add((i + 1) % 7);
    f1.add((i + 3) % 7);
    f2.add(i);
    f2.add((i + 2) % 7);
    f2.add((i + 3) % 7);
    torus.facets.push_back(f1);
    torus.facets.push_back(f2);
  }
  HomologyProfile h = homology(torus);
  CHECK(h.simplex_counts == std::vector<long long>{7, 21, 14});
  CHECK(h.euler == 0);
  CHECK(h.betti == std::vector<long long>{1, 2, 1});
  for (const auto& degree : h.torsion) CHECK(degree.empty());
}

TEST_CASE("homology of an empty nerve is all zero") {
  HomologyProfile profile = nerve_homology("a3.cox", GenSet{});
  CHECK(profile.betti.empty());
  CHECK(profile.euler == 0);
}

TEST_CASE("dim bounds: (3,4,6) pins dimension two") {
  DimBounds bounds = dimss_bounds(load_system("tri346.cox"));
  CHECK(bounds.lower == 2);
  CHECK(bounds.upper == 2);
  CHECK(bounds.kind == DimBounds::WitnessKind::Homology);
  CHECK(bounds.witness_T == GenSet{0, 1, 2});
  CHECK(bounds.witness_k == 1);
}

TEST_CASE("dim bounds: infinite dihedral acts on a line") {
  DimBounds bounds = dimss_bounds(load_system("i2inf.cox"));
  CHECK(bounds.lower == 1);
  CHECK(bounds.upper == 1);
  CHECK(bounds.witness_k == 0);  // reduced H_0 of two points
}

TEST_CASE("dim bounds: gap between lower bound and top finite rank") {
  // (3,4,6) triangle plus a commuting generator: the triangle sub-nerve is a
  // circle while {a,b,d} etc. are finite of rank 3
  DimBounds bounds = dimss_bounds(load_system("quad.cox"));
  CHECK(bounds.lower == 2);
  CHECK(bounds.upper == 3);
  CHECK(bounds.kind == DimBounds::WitnessKind::Homology);
  CHECK(bounds.witness_T == GenSet{0, 1, 2});
  CHECK(bounds.witness_k == 1);
}

TEST_CASE("dim bounds: undefined for finite groups; rank cap respected") {
  CHECK_THROWS_AS(dimss_bounds(load_system("b3.cox")), DomainError);

  // with the subset sweep capped at rank 2, only the spherical floor sees the
  // infinite triangle
  DimBounds capped = dimss_bounds(load_system("quad.cox"), 2);
  CHECK(capped.lower == 2);
  CHECK(capped.kind == DimBounds::WitnessKind::Spherical);
  CHECK(capped.witness_k == 1);  // infinite 2-spherical subgroup
  CHECK(capped.witness_T == GenSet{0, 1, 2});
}
