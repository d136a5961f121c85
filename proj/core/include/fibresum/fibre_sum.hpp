#pragma once

#include "fibresum/manifold.hpp"

namespace fibresum {

/// The integers a_i = <C, alpha_i> against a fixed basis of H_1 of the fibre;
/// they determine the gluing diffeomorphism up to isotopy.
struct GluingClass {
  IntVec a;

  static GluingClass zero(int genus) { return GluingClass{zero_vec(2 * genus)}; }
  /// gcd of the entries (the divisibility of the class C).
  Int div() const {
    Int g = gcd_all(a);
    return g < 0 ? Int(-g) : g;
  }
};

/// Role of one basis index in the normal-form basis of a fibre sum.
struct BasisRole {
  enum class Kind { P, S, R, Section, Fibre };
  Kind kind = Kind::P;
  int summand = -1;  // which P block (for Kind::P)
  int index = -1;    // position inside a P block, or the pair index for S/R
};

struct NormalFormLabels {
  std::vector<BasisRole> roles;
};

struct SummandInfo {
  Fibred4Manifold manifold;
  std::vector<LatticeVector> p_basis;  // complement of {fibre, section}
  int p_offset = 0;                    // start of this P block in the sum's basis
};

/// A generalized fibre sum in normal form.  The sum's lattice is constructed
/// abstractly so that its standard basis *is* the normal-form basis
/// [P(M_1) | ... | P(M_n) | S_1 R_1 ... S_c R_c | B Sigma].
struct FibreSumResult {
  Fibred4Manifold manifold;
  NormalFormLabels labels;
  int summand_count = 1;
  GluingClass gluing;
  IntVec S_squares;
  std::vector<SummandInfo> summands;
  int pair_count = 0;  // c
  int sr_offset = 0;
  int b_index = 0;
  int fibre_index = 0;

  int s_index(int i) const { return sr_offset + 2 * i; }
  int r_index(int i) const { return sr_offset + 2 * i + 1; }
  bool trivial() const { return summand_count == 1; }
};

/// Coordinates of a class of a summand with respect to
/// [P basis | fibre | section].
struct SummandDecomposition {
  IntVec p;
  Int fibre_coeff = 0;
  Int section_coeff = 0;
};

SummandDecomposition decompose_in_summand(const SummandInfo& s, const LatticeVector& v);

/// Rim-torus coefficients r_i = K_X0.S_i - a_i (K_N.B_N + 1 - (2g-2) B_N^2) of
/// the canonical class of the sum M #_Sigma N with gluing C.
IntVec rim_coefficients(const Fibred4Manifold& M, const Fibred4Manifold& N,
                        const GluingClass& C, const IntVec& K_X0_S);

/// Vanishing-surface squares compatible with a characteristic canonical class:
/// -2 where the rim coefficient is even, -1 where it is odd.
IntVec default_S_squares(const Fibred4Manifold& M, const Fibred4Manifold& N,
                         const GluingClass& C, const IntVec& K_X0_S);

FibreSumResult generalized_fibre_sum(const Fibred4Manifold& M, const Fibred4Manifold& N,
                                     const GluingClass& C, const IntVec& S_squares,
                                     const IntVec& K_X0_S);

FibreSumResult generalized_fibre_sum(const Fibred4Manifold& M, const Fibred4Manifold& N,
                                     const GluingClass& C, const IntVec& S_squares);

/// M(n): the n-fold untwisted fibre sum, built directly in normal form with
/// (-2)-vanishing spheres and section block [[-n,1],[1,0]].
FibreSumResult iterated_fibre_sum(const Fibred4Manifold& M, int n);

/// M(m,n,C) = M(m) #_Sigma M(n) with gluing class C.
FibreSumResult twisted_sum(int m, int n, const Fibred4Manifold& M, const GluingClass& C);

}  // namespace fibresum
