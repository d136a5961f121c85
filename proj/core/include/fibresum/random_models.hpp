#pragma once

#include "fibresum/fibre_sum.hpp"

#include <random>

namespace fibresum {

/// Some characteristic vector of a unimodular lattice, found by solving
/// Gram x = diag(Gram) over GF(2).
LatticeVector characteristic_vector(const IntegralLattice& L);

/// A random simply-connected fibred model: a unimodular lattice built from a
/// [[B^2,1],[1,0]] block plus random <1>/<-1>/H summands, with a canonical
/// class adjusted so that K.Sigma = 2g-2.  Used by property tests and the CLI
/// self test.
Fibred4Manifold random_fibred_manifold(std::mt19937_64& rng, int max_rank = 10,
                                       int max_genus = 3, int min_genus = 1);

/// A random gluing class with entries in [-bound, bound].
GluingClass random_gluing(std::mt19937_64& rng, int genus, int bound = 2);

}  // namespace fibresum
