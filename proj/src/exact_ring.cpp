#include "exact_ring.hpp"

#include <stdexcept>

namespace cox::detail {

namespace {

// Quotient of exact polynomial division (ascending coefficients, monic-ish
// divisor with invertible leading coefficient +-1). Used for cyclotomics,
// where division is exact.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<Int> q(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    Int c = num[k + dd] / den[dd];
    q[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

// Cyclotomic polynomial Phi_n by the usual divide-out recursion.
std::vector<Int> cyclotomic(int n) {
  if (n == 1) return {-1, 1};  // z - 1
  std::vector<Int> num(n + 1);
  num[0] = -1;
  num[n] = 1;  // z^n - 1
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic(d));
  return num;
}

}  // namespace

// Phi_n is palindromic for n >= 3, so Phi_n(z) = z^{D/2} * Psi_n(z + 1/z) with
// D = deg Phi_n. Expand z^k + z^{-k} in y = z + 1/z by the Chebyshev-style
// recursion to recover Psi_n, the minimal polynomial of 2cos(2pi/n).
std::vector<Int> cos_minimal_polynomial(int n) {
  if (n == 1) return {-2, 1};  // y - 2
  if (n == 2) return {2, 1};   // y + 2
  std::vector<Int> phi = cyclotomic(n);
  const int D = static_cast<int>(phi.size()) - 1;
  const int h = D / 2;

  // p[k](y) = z^k + z^{-k} as a polynomial in y; p[0] = 2, p[1] = y.
  std::vector<std::vector<Int>> p(h + 1);
  p[0] = {2};
  if (h >= 1) p[1] = {0, 1};
  for (int k = 2; k <= h; ++k) {
    std::vector<Int> next(k + 1);
    for (size_t i = 0; i < p[k - 1].size(); ++i) next[i + 1] += p[k - 1][i];
    for (size_t i = 0; i < p[k - 2].size(); ++i) next[i] -= p[k - 2][i];
    p[k] = std::move(next);
  }

  std::vector<Int> psi(h + 1);
  psi[0] = phi[h];  // constant term from the middle coefficient
  for (int k = 1; k <= h; ++k)
    for (size_t i = 0; i < p[k].size(); ++i) psi[i] += phi[h + k] * p[k][i];
  return psi;  // monic since phi is
}

RealCycloRing::RealCycloRing(int N) : N_(N) {
  if (N < 1) throw std::logic_error("ring order must be positive");
  minpoly_ = cos_minimal_polynomial(2 * N);  // minpoly of 2cos(pi/N)
  degree_ = static_cast<int>(minpoly_.size()) - 1;
}

Poly RealCycloRing::reduce_mod_minpoly(std::vector<Int> c) const {
  for (int k = static_cast<int>(c.size()) - 1; k >= degree_; --k) {
    if (c[k] == 0) continue;
    Int lead = c[k];
    for (int i = 0; i <= degree_; ++i) c[k - degree_ + i] -= lead * minpoly_[i];
  }
  c.resize(degree_);
  return c;
}

Poly RealCycloRing::two_cos_pi_over(int m) const {
  if (m == 2) return from_int(0);
  if (m == 3) return from_int(1);
  if (m < 2 || N_ % m != 0) throw std::logic_error("label does not divide ring order");
  // 2cos(k*pi/N) with k = N/m, via the recursion p_0 = 2, p_1 = t,
  // p_i = t*p_{i-1} - p_{i-2}, evaluated at t = 2cos(pi/N).
  auto times_t = [this](const Poly& p) {
    std::vector<Int> shifted(p.size() + 1);
    for (size_t i = 0; i < p.size(); ++i) shifted[i + 1] = p[i];
    return reduce_mod_minpoly(std::move(shifted));
  };
  const int k = N_ / m;
  Poly prev = from_int(2);
  Poly cur = reduce_mod_minpoly({0, 1});  // t
  for (int i = 2; i <= k; ++i) {
    Poly next = sub(times_t(cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly RealCycloRing::add(const Poly& a, const Poly& b) const {
  Poly out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = a[i] + b[i];
  return out;
}

Poly RealCycloRing::sub(const Poly& a, const Poly& b) const {
  Poly out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = a[i] - b[i];
  return out;
}

Poly RealCycloRing::mul(const Poly& a, const Poly& b) const {
  std::vector<Int> conv(2 * degree_);
  for (int i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  return reduce_mod_minpoly(std::move(conv));
}

bool RealCycloRing::is_zero(const Poly& a) const {
  for (const Int& c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace cox::detail
