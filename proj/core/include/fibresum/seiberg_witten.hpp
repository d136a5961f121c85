#pragma once

#include "fibresum/fibre_sum.hpp"

namespace fibresum {

/// Finite list of (characteristic class, SW value) pairs.  The overall sign is
/// fixed by the convention sw(+K) = +1; other relative signs are conventional.
struct BasicClassEntry {
  LatticeVector cls;
  Int sw = 0;
};

struct BasicClassSet {
  std::vector<BasicClassEntry> entries;

  std::size_t size() const { return entries.size(); }
  void sort();
};

/// Basic classes of a blow-up of a minimal general-type surface:
/// all 2^{r+1} classes +-(K' +- E_1 +- ... +- E_r), each with |sw| = 1.
BasicClassSet basic_classes_blowup(const Fibred4Manifold& M);

/// Subset pairing to target (= +-(2g-2)) with the fibre.
BasicClassSet max_fibre_filter(const BasicClassSet& s, const IntegralLattice& L,
                               const LatticeVector& fibre, int g, int sign = +1);

/// Coordinates of a characteristic class of a fibre sum in the normal-form
/// basis: PD(k) = p_M + p_N + sum eps_i R_i + b B_X + beta Sigma_X.
struct CharacteristicDecomposition {
  IntVec p_M;
  IntVec p_N;
  IntVec eps;       // rim-torus coefficients
  IntVec s_coeffs;  // vanishing-surface coefficients, zero for basic classes
  Int b_coeff = 0;  // coefficient of B_X = pairing with the fibre
  Int beta = 0;     // coefficient of Sigma_X
};

/// basic_mode enforces k characteristic and the vanishing-surface coefficients
/// to be zero (the form a Seiberg-Witten basic class must have).
CharacteristicDecomposition decompose_characteristic(const FibreSumResult& X,
                                                     const LatticeVector& k,
                                                     bool basic_mode = true);

/// Morgan-Szabo-Taubes sum: sum of sw(l1) sw(l2) over pairs from the matching
/// sets of the two summands with beta_X = beta_M + beta_N + 2.  Requires g >= 2
/// and b_coeff = 2g-2; the result is reported up to the global sign of the
/// formula.
Int mst_sum(const FibreSumResult& X, const CharacteristicDecomposition& k_dec,
            const BasicClassSet& SM, const BasicClassSet& SN);

struct MnBasicClasses {
  FibreSumResult X;       // M(n) realized as M #_Sigma M(n-1)
  BasicClassSet classes;  // {+K_X, -K_X}; zero-fibre-pairing classes are
                          // undetermined and not listed
};

/// Runs the MST induction: the only basic class of M(n) with maximal fibre
/// pairing is +-K_X.  Every other candidate assembled from the matching-set
/// grid is checked to sum to zero.
MnBasicClasses basic_classes_Mn_fibre_nonzero(const Fibred4Manifold& M, int n);

}  // namespace fibresum
