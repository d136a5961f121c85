#pragma once

#include "fibresum/fibre_sum.hpp"

namespace fibresum {

/// Canonical class of a fibre sum in normal-form coordinates.
struct CanonicalData {
  LatticeVector K;  // assembled class in the sum's lattice
  std::vector<IntVec> kbar;  // P-block coordinates, one entry per summand
  IntVec r;                  // rim-torus coefficients
  Int b_coeff = 0;           // coefficient of B_X, always 2g-2
  Int sigma_coeff = 0;       // coefficient of Sigma_X
};

/// General canonical-class formula for a binary sum:
/// K_X = Kbar_M + Kbar_N + sum r_i R_i + (2g-2) B_X + sigma_X Sigma_X.
CanonicalData gompf_canonical(const FibreSumResult& X, const IntVec& K_X0_S);

/// Closed form for M(n); for n = 1 reproduces K_M exactly.
CanonicalData canonical_Mn(const FibreSumResult& X);

/// Closed form for M(m,n,C) with rim coefficients r_i = -a_i((2g-1)n - 1).
CanonicalData canonical_MmnC(const FibreSumResult& X, int m, int n);

/// Divisibility of K_M + Sigma_M, the quantity d of the extension obstruction.
Int d_of(const Fibred4Manifold& M);

/// gcd(n-2, d_of(M)) = divisibility of K_{M(n)}.
Int div_K_Mn(const Fibred4Manifold& M, int n);

/// gcd(m+n-2, a((2g-1)n - 1), d_of(M)) = divisibility of K_{M(m,n,C)}.
Int div_K_MmnC(const Fibred4Manifold& M, int m, int n, const GluingClass& C);

}  // namespace fibresum
