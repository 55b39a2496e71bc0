#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/system.hpp"

namespace cox {

using BigInt = boost::multiprecision::cpp_int;

// Classification verdict for an irreducible system.
struct TypeLabel {
  enum class Kind { Finite, Affine, CompactHyperbolic, OtherInfinite };
  Kind kind = Kind::OtherInfinite;
  std::string family;  // "A3", "I2(7)", "~B3", ...; empty for the last two kinds
  int rank = 0;

  std::string str() const;
};

// Template match against the irreducible finite and affine diagrams; an
// infinite system whose proper subsets are all finite and which is not affine
// is compact hyperbolic. `sys` must have a connected diagram.
TypeLabel recognize_irreducible(const CoxeterSystem& sys);

// Finite iff every irreducible component of T matches a finite template.
bool is_finite(const CoxeterSystem& sys, const GenSet& T);

// Product of the component orders from the standard table; nullopt when
// infinite.
std::optional<BigInt> order(const CoxeterSystem& sys, const GenSet& T);

struct SphericityReport {
  int k = 0;
  bool holds = false;
  std::optional<GenSet> witness;  // minimal-rank infinite subset when !holds
};

// Whether every special subgroup of rank <= k is finite. Only the subsets of
// rank min(k, |S|) need checking.
SphericityReport is_k_spherical(const CoxeterSystem& sys, int k);

// max{m : W is m-spherical}; nullopt means infinity (W itself is finite).
std::optional<int> v_of(const CoxeterSystem& sys);

// Floating-point cross-check of the template classification via the cosine
// matrix B_ii = 1, B_ij = -cos(pi/m_ij) (infinity contributes -1).
enum class GramSignature {
  PositiveDefinite,
  PositiveSemidefiniteSingular,
  Indefinite,
  Inconclusive,  // an eigenvalue falls in the tolerance gray band
};
GramSignature gram_signature_oracle(const CoxeterSystem& sys, const GenSet& T);

// All T maximal under inclusion with (W_T, T) an (n+1)-spherical system, in
// deterministic subset order.
std::vector<GenSet> maximal_spherical_subsets(const CoxeterSystem& sys, int n);

// Whether (W_T, T) is k-spherical as a system in its own right.
bool subset_is_k_spherical(const CoxeterSystem& sys, const GenSet& T, int k);

// Subsets of {0..n-1} of the given size, ascending in GenSet::order_before.
std::vector<GenSet> subsets_of_size(int n, int size);

}  // namespace cox
