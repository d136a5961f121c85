#pragma once

#include "fibresum/lattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace fibresum {

/// A simply-connected closed 4-manifold carrying a genus-g fibration, given by
/// an explicit intersection lattice with distinguished fibre and section
/// classes.  All invariants are checked by validate().
struct Fibred4Manifold {
  std::string name;
  Int euler = 0;
  Int sigma = 0;
  IntegralLattice lattice;
  LatticeVector canonical;
  LatticeVector fibre;    // generic-fibre class, square 0
  LatticeVector section;  // meets the fibre once
  int genus = 0;
  std::vector<LatticeVector> exceptional;
  bool minimal_general_type_base = false;

  Int b2() const { return euler - 2; }
  Int b2_plus() const;

  /// Checks every structural invariant; throws ValidationError on failure.
  void validate() const;
};

/// Numerical data of a projectively embedded algebraic surface, modelled by an
/// explicit lattice with the canonical and hyperplane-section classes.
struct AlgebraicSurfaceData {
  std::string name;
  Int K_squared = 0;
  Int euler = 0;  // c_2
  IntegralLattice lattice;
  LatticeVector canonical;
  LatticeVector hyperplane;  // transverse hyperplane section
  Int degree = 0;            // = hyperplane^2
  bool minimal_general_type = false;

  Int sigma() const;  // (K^2 - 2 c_2)/3
  void validate() const;
};

using Preset = std::variant<Fibred4Manifold, AlgebraicSurfaceData>;

/// Blows up the base locus of a Lefschetz pencil: r = degree exceptional
/// spheres are attached, the proper transform of the hyperplane section
/// becomes the square-zero fibre and E_1 serves as the section.
Fibred4Manifold blow_up(const AlgebraicSurfaceData& surface, const Int& r);

/// Known presets: "E1", "quintic", "CP2".
Preset build_preset(const std::string& name);

/// Resolves a preset to a fibred manifold (blowing up surface data).
Fibred4Manifold preset_manifold(const std::string& name);

bool is_spin(const Fibred4Manifold& m);

/// e(M) - (4 - 4g), the critical point count of a Lefschetz fibration over S^2.
Int count_singular_fibres(const Fibred4Manifold& m);

FormDescriptor classify_homeo(const Fibred4Manifold& m);

}  // namespace fibresum
