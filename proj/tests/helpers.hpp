#pragma once

#include "fibresum/lattice.hpp"

#include <random>

namespace fibresum::testing {

/// A pair (U, W = U^{-T}) of unimodular matrices built from random elementary
/// operations.  Transporting gram -> U gram U^T and coords -> W coords keeps
/// all pairings fixed.
struct BasisChange {
  IntMat u;
  IntMat w;
};

inline BasisChange random_basis_change(std::mt19937_64& rng, int n, int steps = 12) {
  BasisChange bc{zero_mat(n, n), zero_mat(n, n)};
  for (int i = 0; i < n; ++i) bc.u[i][i] = bc.w[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    const int i = idx(rng);
    int j = idx(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c row_j on U; inverse-transpose op on W
        if (i == j) break;
        const Int c = coeff(rng);
        for (int col = 0; col < n; ++col) bc.u[i][col] += c * bc.u[j][col];
        for (int col = 0; col < n; ++col) bc.w[j][col] -= c * bc.w[i][col];
        break;
      }
      case 1:
        std::swap(bc.u[i], bc.u[j]);
        std::swap(bc.w[i], bc.w[j]);
        break;
      default:
        for (int col = 0; col < n; ++col) bc.u[i][col] = -bc.u[i][col];
        for (int col = 0; col < n; ++col) bc.w[i][col] = -bc.w[i][col];
        break;
    }
  }
  return bc;
}

inline IntMat congruence(const IntMat& u, const IntMat& g) {
  const int n = static_cast<int>(g.size());
  IntMat ug = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) ug[i][j] += u[i][k] * g[k][j];
  IntMat out = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[i][j] += ug[i][k] * u[j][k];
  return out;
}

inline IntVec apply(const IntMat& m, const IntVec& v) {
  const int n = static_cast<int>(m.size());
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Independent signature oracle: exact characteristic polynomial via
/// Faddeev-LeVerrier, then Descartes sign counts (exact for symmetric
/// matrices, whose eigenvalues are all real).
inline Signature signature_charpoly_oracle(const IntegralLattice& L) {
  const int n = L.rank();
  // coeffs[k] multiplies lambda^k in det(lambda I - A).
  IntVec coeffs(n + 1, 0);
  coeffs[n] = 1;
  IntMat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;  // M_0 = I
  Int c = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{n-k+1} I) with the previous coefficient on the diagonal
    IntMat prev = m;
    if (k > 1)
      for (int i = 0; i < n; ++i) prev[i][i] += c;
    IntMat next = zero_mat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t) next[i][j] += L.gram[i][t] * prev[t][j];
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += next[i][i];
    c = -tr / k;
    coeffs[n - k] = c;
    m = next;
  }

  auto sign_changes = [&](bool negate_odd) {
    int changes = 0;
    int last = 0;
    for (int k = n; k >= 0; --k) {
      Int v = coeffs[k];
      if (negate_odd && (n - k) % 2 == 1) v = -v;
      if (v == 0) continue;
      const int s = v > 0 ? 1 : -1;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };

  Signature sig;
  sig.b_plus = sign_changes(false);
  sig.b_minus = sign_changes(true);
  int zeros = 0;
  while (zeros <= n && coeffs[zeros] == 0) ++zeros;
  sig.b_zero = zeros;
  return sig;
}

/// Brute-force divisibility: gcd of pair(v, w) over all w in [-3,3]^rank.
inline Int divisibility_bruteforce(const IntegralLattice& L, const LatticeVector& v) {
  const int n = L.rank();
  IntVec w(n, -3);
  Int g = 0;
  while (true) {
    LatticeVector wv = L.vector(w);
    g = gcd(g, pair(L, v, wv));
    int i = 0;
    while (i < n && w[i] == 3) w[i++] = -3;
    if (i == n) break;
    w[i] += 1;
  }
  return g < 0 ? Int(-g) : g;
}

}  // namespace fibresum::testing
