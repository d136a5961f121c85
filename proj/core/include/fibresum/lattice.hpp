#pragma once

#include "fibresum/ints.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibresum {

struct LatticeVector;

/// A finitely generated free abelian group with a symmetric integer pairing.
/// Immutable after construction.  Each lattice carries an identity so that
/// pairing vectors across different lattices is an error, not UB.
struct IntegralLattice {
  IntMat gram;
  std::uint64_t id = 0;

  static IntegralLattice from_gram(IntMat g);

  int rank() const { return static_cast<int>(gram.size()); }

  LatticeVector vector(IntVec coords) const;
  LatticeVector zero() const;
  LatticeVector basis_vector(int i) const;
};

/// An integer coordinate vector in the basis of its ambient lattice.
struct LatticeVector {
  IntVec coords;
  std::uint64_t lattice_id = 0;

  bool is_zero() const {
    for (const Int& c : coords)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice_id == b.lattice_id && a.coords == b.coords;
  }
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(const Int& c, const LatticeVector& v);

struct Signature {
  int b_plus = 0;
  int b_minus = 0;
  int b_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  Int index() const { return Int(b_plus) - b_minus; }
};

enum class Parity { Even, Odd };

/// Symbolic description of an indefinite unimodular form in terms of the
/// standard generators <1>, <-1>, H and E8(+-1).
struct FormDescriptor {
  Parity parity = Parity::Odd;
  int rank = 0;
  Int signature = 0;
  std::string decomposition;
  bool classified = false;
};

Int pair(const IntegralLattice& L, const LatticeVector& v, const LatticeVector& w);

IntegralLattice direct_sum(const IntegralLattice& A, const IntegralLattice& B);

/// Exact signature via rational congruence diagonalization.
Signature signature(const IntegralLattice& L);

std::pair<Int, bool> determinant_and_unimodularity(const IntegralLattice& L);

Parity parity(const IntegralLattice& L);

bool is_characteristic(const IntegralLattice& L, const LatticeVector& k);

/// gcd over all w of pair(v, w).  Requires L unimodular; 0 iff v = 0.
Int divisibility(const IntegralLattice& L, const LatticeVector& v);

/// Integer basis of the orthogonal complement of the span.  The span must be
/// linearly independent with unimodular Gram so that L splits over Z.
std::vector<LatticeVector> orthogonal_complement(const IntegralLattice& L,
                                                 const std::vector<LatticeVector>& span);

FormDescriptor classify_indefinite_unimodular(const IntegralLattice& L);

// Named generators.
IntegralLattice hyperbolic_plane();
IntegralLattice unit_form(int sign);
IntegralLattice diagonal_form(const std::vector<int>& signs);
IntegralLattice e8_form(int sign);

// --- exact linear algebra helpers shared by the other modules ---

/// Gram matrix of a list of vectors under the pairing of L.
IntMat gram_of(const IntegralLattice& L, const std::vector<LatticeVector>& vecs);

/// Exact determinant of a (not necessarily symmetric) integer matrix.
Int determinant(const IntMat& m);

/// Solves sum_j x_j * columns[j] = rhs exactly; nullopt if there is no
/// rational solution or the solution is not integral.
std::optional<IntVec> solve_integer(const IntMat& columns, const IntVec& rhs);

/// Integer kernel of an s x n matrix: basis of {x in Z^n : A x = 0}.
std::vector<IntVec> integer_kernel(const IntMat& a, int n);

std::string to_string(const Signature& s);
std::string to_string(Parity p);

}  // namespace fibresum
