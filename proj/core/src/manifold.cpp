#include "fibresum/manifold.hpp"

namespace fibresum {

Int Fibred4Manifold::b2_plus() const { return (b2() + sigma) / 2; }

void Fibred4Manifold::validate() const {
  if (Int(lattice.rank()) != euler - 2)
    throw ValidationError(name + ": rank must equal e - 2");
  const auto [det, uni] = determinant_and_unimodularity(lattice);
  if (!uni) throw ValidationError(name + ": intersection form is not unimodular");
  const Signature sig = signature(lattice);
  if (sig.b_zero != 0 || sig.index() != sigma)
    throw ValidationError(name + ": signature mismatch");
  if (!is_characteristic(lattice, canonical))
    throw ValidationError(name + ": canonical class is not characteristic");
  if (pair(lattice, fibre, fibre) != 0)
    throw ValidationError(name + ": fibre must have square zero");
  if (pair(lattice, fibre, section) != 1)
    throw ValidationError(name + ": fibre and section must meet once");
  if (pair(lattice, canonical, fibre) != 2 * Int(genus) - 2)
    throw ValidationError(name + ": adjunction K.fibre = 2g-2 fails");
}

Int AlgebraicSurfaceData::sigma() const {
  const Int num = K_squared - 2 * euler;
  if (num % 3 != 0)
    throw ValidationError(name + ": (K^2 - 2 c_2) is not divisible by 3");
  return num / 3;
}

void AlgebraicSurfaceData::validate() const {
  if (degree < 1) throw ValidationError(name + ": degree must be >= 1");
  if (pair(lattice, hyperplane, hyperplane) != degree)
    throw ValidationError(name + ": degree must equal the hyperplane square");
  if (pair(lattice, canonical, canonical) != K_squared)
    throw ValidationError(name + ": K^2 mismatch");
  if (Int(lattice.rank()) != euler - 2)
    throw ValidationError(name + ": rank must equal c_2 - 2");
  const Signature sig = signature(lattice);
  if (sig.b_zero != 0 || sig.index() != sigma())
    throw ValidationError(name + ": signature mismatch");
  if (!is_characteristic(lattice, canonical))
    throw ValidationError(name + ": canonical class is not characteristic");
}

Fibred4Manifold blow_up(const AlgebraicSurfaceData& surface, const Int& r) {
  if (r != surface.degree)
    throw PreconditionError(surface.name +
                            ": blow-up count must equal the degree of the embedding");
  const int rr = static_cast<int>(r);
  const int n0 = surface.lattice.rank();
  IntegralLattice L =
      direct_sum(surface.lattice, diagonal_form(std::vector<int>(rr, -1)));

  auto lift = [&](const LatticeVector& v) {
    IntVec c = zero_vec(n0 + rr);
    for (int i = 0; i < n0; ++i) c[i] = v.coords[i];
    return L.vector(std::move(c));
  };

  Fibred4Manifold m;
  m.name = surface.name + "#" + std::to_string(rr) + "CP2bar";
  m.lattice = L;
  m.exceptional.reserve(rr);
  LatticeVector sum_e = L.zero();
  for (int i = 0; i < rr; ++i) {
    LatticeVector e = L.basis_vector(n0 + i);
    sum_e = sum_e + e;
    m.exceptional.push_back(std::move(e));
  }
  m.canonical = lift(surface.canonical) + sum_e;
  m.fibre = lift(surface.hyperplane) - sum_e;
  m.section = m.exceptional.front();
  m.euler = surface.euler + r;
  m.sigma = surface.sigma() - r;
  const Int k_dot_sigma = pair(surface.lattice, surface.canonical, surface.hyperplane);
  m.genus = static_cast<int>(1 + (k_dot_sigma + r) / 2);
  m.minimal_general_type_base = surface.minimal_general_type;
  m.validate();
  return m;
}

Preset build_preset(const std::string& name) {
  if (name == "CP2") {
    // CP^2 embedded by cubics; the pencil of cubic curves has genus-1 fibres.
    AlgebraicSurfaceData s;
    s.name = "CP2";
    s.K_squared = 9;
    s.euler = 3;
    s.lattice = unit_form(1);
    s.canonical = s.lattice.vector({-3});
    s.hyperplane = s.lattice.vector({3});
    s.degree = 9;
    s.minimal_general_type = false;
    s.validate();
    return s;
  }
  if (name == "quintic") {
    // Quintic surface in CP^3 under its O(1) embedding: K = H, K^2 = 5,
    // c_2 = 55.  The lattice is the odd form 9<1> + 44<-1> with H placed as a
    // primitive characteristic vector of square 5 (7^2 + 8 - 3^2 - 43 = 5).
    AlgebraicSurfaceData s;
    s.name = "quintic";
    s.K_squared = 5;
    s.euler = 55;
    std::vector<int> signs(53, -1);
    for (int i = 0; i < 9; ++i) signs[i] = 1;
    s.lattice = diagonal_form(signs);
    IntVec h(53, 1);
    h[0] = 7;
    h[9] = 3;
    s.hyperplane = s.lattice.vector(h);
    s.canonical = s.hyperplane;
    s.degree = 5;
    s.minimal_general_type = true;
    s.validate();
    return s;
  }
  if (name == "E1") {
    Fibred4Manifold m = blow_up(std::get<AlgebraicSurfaceData>(build_preset("CP2")), 9);
    m.name = "E1";
    return m;
  }
  throw ValidationError("unknown preset: " + name);
}

Fibred4Manifold preset_manifold(const std::string& name) {
  Preset p = build_preset(name);
  if (auto* m = std::get_if<Fibred4Manifold>(&p)) return *m;
  const auto& s = std::get<AlgebraicSurfaceData>(p);
  return blow_up(s, s.degree);
}

bool is_spin(const Fibred4Manifold& m) {
  const bool even = parity(m.lattice) == Parity::Even;
  const bool k_even =
      m.canonical.is_zero() || divisibility(m.lattice, m.canonical) % 2 == 0;
  if (even != k_even)
    throw PreconditionError(m.name + ": spin criteria disagree (inconsistent model)");
  return even;
}

Int count_singular_fibres(const Fibred4Manifold& m) {
  const Int c = m.euler - (4 - 4 * Int(m.genus));
  if (c < 0)
    throw PreconditionError(m.name + ": negative critical point count");
  return c;
}

FormDescriptor classify_homeo(const Fibred4Manifold& m) {
  FormDescriptor fd = classify_indefinite_unimodular(m.lattice);
  if (!fd.classified)
    throw PreconditionError(m.name + ": intersection form is " + fd.decomposition);
  return fd;
}

}  // namespace fibresum
