#include "fibresum/canonical.hpp"

namespace fibresum {

namespace {

/// Kbar = K - (2g-2)B - (K.B - (2g-2)B^2) Sigma, which lies in the P block.
IntVec kbar_coords(const SummandInfo& s, int g) {
  const auto& m = s.manifold;
  const Int two_g_2 = 2 * Int(g) - 2;
  const Int kb = pair(m.lattice, m.canonical, m.section);
  const Int b2 = pair(m.lattice, m.section, m.section);
  const LatticeVector v =
      m.canonical - two_g_2 * m.section - (kb - two_g_2 * b2) * m.fibre;
  SummandDecomposition d = decompose_in_summand(s, v);
  if (d.fibre_coeff != 0 || d.section_coeff != 0)
    throw PreconditionError(m.name + ": Kbar does not land in the P block");
  return d.p;
}

LatticeVector assemble_class(const FibreSumResult& x, const std::vector<IntVec>& kbar,
                             const IntVec& r, const Int& b, const Int& sigma) {
  IntVec c = zero_vec(x.manifold.lattice.rank());
  for (std::size_t s = 0; s < kbar.size(); ++s) {
    const int off = x.summands[s].p_offset;
    for (std::size_t i = 0; i < kbar[s].size(); ++i) c[off + i] = kbar[s][i];
  }
  for (int i = 0; i < x.pair_count; ++i) c[x.r_index(i)] = r[i];
  c[x.b_index] = b;
  c[x.fibre_index] = sigma;
  return x.manifold.lattice.vector(std::move(c));
}

}  // namespace

CanonicalData gompf_canonical(const FibreSumResult& X, const IntVec& K_X0_S) {
  if (X.summand_count != 2)
    throw PreconditionError("gompf_canonical applies to a binary fibre sum");
  const auto& M = X.summands[0].manifold;
  const auto& N = X.summands[1].manifold;
  const int g = X.manifold.genus;
  const Int two_g_2 = 2 * Int(g) - 2;

  CanonicalData data;
  data.kbar = {kbar_coords(X.summands[0], g), kbar_coords(X.summands[1], g)};
  data.r = rim_coefficients(M, N, X.gluing, K_X0_S);
  data.b_coeff = two_g_2;
  data.sigma_coeff = pair(M.lattice, M.canonical, M.section) +
                     pair(N.lattice, N.canonical, N.section) + 2 -
                     two_g_2 * (pair(M.lattice, M.section, M.section) +
                                pair(N.lattice, N.section, N.section));
  data.K = assemble_class(X, data.kbar, data.r, data.b_coeff, data.sigma_coeff);
  return data;
}

CanonicalData canonical_Mn(const FibreSumResult& X) {
  const int g = X.summands.front().manifold.genus;
  const Int two_g_2 = 2 * Int(g) - 2;
  const int n = X.summand_count;

  CanonicalData data;
  data.b_coeff = two_g_2;
  data.sigma_coeff = Int(n - 2) + two_g_2 * n;
  for (const auto& s : X.summands) data.kbar.push_back(kbar_coords(s, g));
  if (X.trivial()) {
    // K_{M(1)} = K_M; the closed form collapses to this (checked in tests).
    data.K = X.manifold.canonical;
    return data;
  }
  data.r = zero_vec(X.pair_count);
  data.K = assemble_class(X, data.kbar, data.r, data.b_coeff, data.sigma_coeff);
  return data;
}

CanonicalData canonical_MmnC(const FibreSumResult& X, int m, int n) {
  if (X.summand_count != 2)
    throw PreconditionError("canonical_MmnC applies to a binary fibre sum");
  const int g = X.manifold.genus;
  const Int two_g_2 = 2 * Int(g) - 2;

  CanonicalData data;
  data.kbar = {kbar_coords(X.summands[0], g), kbar_coords(X.summands[1], g)};
  const Int factor = (2 * Int(g) - 1) * n - 1;
  data.r.resize(X.pair_count);
  for (int i = 0; i < X.pair_count; ++i) data.r[i] = -X.gluing.a[i] * factor;
  data.b_coeff = two_g_2;
  data.sigma_coeff = Int(m + n - 2) + two_g_2 * (m + n);
  data.K = assemble_class(X, data.kbar, data.r, data.b_coeff, data.sigma_coeff);
  return data;
}

Int d_of(const Fibred4Manifold& M) {
  return divisibility(M.lattice, M.canonical + M.fibre);
}

Int div_K_Mn(const Fibred4Manifold& M, int n) {
  if (n < 1) throw PreconditionError("div_K_Mn requires n >= 1");
  return gcd(Int(n - 2), d_of(M));
}

Int div_K_MmnC(const Fibred4Manifold& M, int m, int n, const GluingClass& C) {
  if (m < 1 || n < 1) throw PreconditionError("div_K_MmnC requires m, n >= 1");
  const Int a = C.div();
  const Int factor = (2 * Int(M.genus) - 1) * n - 1;
  return gcd(gcd(Int(m + n - 2), a * factor), d_of(M));
}

}  // namespace fibresum
