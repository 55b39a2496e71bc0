#pragma once

// Exact arithmetic in Z[2cos(pi/N)], the coefficient ring of the geometric
// reflection representation. Elements are integer-coefficient polynomials in
// t = 2cos(pi/N), reduced modulo the minimal polynomial of t. Internal to the
// group-enumeration engine.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "coxeter/system.hpp"

namespace cox::detail {

using Int = boost::multiprecision::cpp_int;
using Poly = std::vector<Int>;  // coefficient i of t^i; size = ring degree

class RealCycloRing {
 public:
  // N >= 1. Degree of the ring is phi(2N)/2.
  explicit RealCycloRing(int N);

  int degree() const { return degree_; }
  int N() const { return N_; }

  Poly zero() const { return Poly(degree_); }
  Poly from_int(long v) const {
    Poly p = zero();
    p[0] = v;
    return p;
  }
  // 2cos(pi/m) as a ring element. Requires m == 2, m == 3, or m | N.
  Poly two_cos_pi_over(int m) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  bool is_zero(const Poly& a) const;

 private:
  Poly reduce_mod_minpoly(std::vector<Int> coeffs) const;

  int N_;
  int degree_;
  std::vector<Int> minpoly_;  // monic, length degree_+1
};

// Minimal polynomial over Q of 2cos(2pi/n), monic with integer coefficients.
std::vector<Int> cos_minimal_polynomial(int n);

}  // namespace cox::detail
