#pragma once

#include "fibresum/ints.hpp"

#include <optional>

namespace fibresum {

/// Outcome of the extension-obstruction criterion.  The criterion is
/// one-sided: "not obstructed" means inconclusive, never "extends".
struct ObstructionVerdict {
  bool obstructed = false;
  Int d = 0;  // divisibility of K_{M'} + Sigma_{M'}
  Int a = 0;  // divisibility of the gluing class C
  Int n = 1;
  std::optional<Int> witness_m;  // m distinguishing the two divisibilities
  Int div_untwisted = 0;         // div K_{M(m+n)}
  Int div_twisted = 0;           // div K_{M(m,n,C)}
};

/// Embedding parameters realizing a target divisibility d of K + Sigma.
struct PencilParams {
  Int d = 1;
  Int s = 1;
  Int k = 1;
  Int s0 = 1;
  Int k0 = 1;
  Int genus = 0;   // section genus, once embedding data is supplied
  Int degree = 0;  // Sigma^2
};

/// d | x, with the convention that 0 divides only 0.
bool divides(const Int& d, const Int& x);

/// The diffeomorphism determined by C (divisibility a) on the fibre boundary
/// in M(n) does not extend over the complement when d does not divide a(n-1).
/// A witness m is produced for which the untwisted and twisted canonical-class
/// divisibilities differ.  When a genus is supplied, d | 2g-2 is checked and
/// the full gcd formula with a((2g-1)n - 1) is used.
ObstructionVerdict extension_obstructed(const Int& d, const Int& a, const Int& n,
                                        std::optional<Int> genus = std::nullopt);

/// s = least multiple of d that is >= s0; k = least k >= k0 with d | k+1.
PencilParams choose_pencil_params(const Int& d, const Int& s0, const Int& k0);

/// Least s >= 1 with K^2 + 2s K.L + s^2 L^2 > 0 (Nakai-Moishezon numeric part).
Int ample_threshold(const Int& K2, const Int& KL, const Int& L2);

/// Genus of the hyperplane section Sigma = k(K + sL) by adjunction.
Int section_genus(const Int& K2, const Int& KL, const Int& L2, const Int& s,
                  const Int& k);

/// Fills degree and section genus of the embedding determined by the params,
/// checking d | 2g-2.
PencilParams with_embedding(PencilParams p, const Int& K2, const Int& KL,
                            const Int& L2);

}  // namespace fibresum
