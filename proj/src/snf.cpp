#include "coxeter/snf.hpp"

#include <utility>

namespace cox {

namespace {

SnfInt abs_val(const SnfInt& v) { return v < 0 ? SnfInt(-v) : v; }

void swap_columns(IntMatrix& a, int j1, int j2) {
  if (j1 == j2) return;
  for (auto& row : a) std::swap(row[j1], row[j2]);
}

}  // namespace

// Pivot-minimizing reduction. The minimal entry is re-chosen before every
// sweep, which keeps quotients (and hence entry growth) small; every re-entry
// into the loop either shrinks the minimal absolute value in the submatrix or
// removes a nonzero from the pivot cross, so the loop terminates.
std::vector<SnfInt> smith_invariants(IntMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<SnfInt> invariants;

  int t = 0;
  while (t < rows && t < cols) {
    bool settled = false;
    while (!settled) {
      // move the smallest nonzero of the submatrix onto the pivot
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi < 0 || abs_val(a[i][j]) < abs_val(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return invariants;  // submatrix is zero
      std::swap(a[t], a[pi]);
      swap_columns(a, t, pj);

      // one reduction sweep of the pivot cross
      bool cross_clear = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        SnfInt q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) cross_clear = false;  // remainder < |pivot| survives
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        SnfInt q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) cross_clear = false;
      }
      if (!cross_clear) continue;

      // enforce d_t | (everything below-right); folding a bad row into row t
      // leaves entries that the next sweeps shrink below |pivot|
      settled = true;
      for (int i = t + 1; i < rows && settled; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            settled = false;
            break;
          }
    }
    invariants.push_back(abs_val(a[t][t]));
    ++t;
  }
  return invariants;
}

}  // namespace cox
