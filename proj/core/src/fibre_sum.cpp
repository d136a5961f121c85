#include "fibresum/fibre_sum.hpp"

#include "fibresum/canonical.hpp"

namespace fibresum {

SummandDecomposition decompose_in_summand(const SummandInfo& s, const LatticeVector& v) {
  const int n = s.manifold.lattice.rank();
  IntMat columns;
  columns.reserve(s.p_basis.size() + 2);
  for (const auto& b : s.p_basis) columns.push_back(b.coords);
  columns.push_back(s.manifold.fibre.coords);
  columns.push_back(s.manifold.section.coords);
  if (static_cast<int>(v.coords.size()) != n || v.lattice_id != s.manifold.lattice.id)
    throw ValidationError("decompose_in_summand: vector not in the summand lattice");
  auto x = solve_integer(columns, v.coords);
  if (!x)
    throw PreconditionError("class does not decompose integrally in the summand basis");
  SummandDecomposition d;
  d.p.assign(x->begin(), x->end() - 2);
  d.fibre_coeff = (*x)[x->size() - 2];
  d.section_coeff = (*x)[x->size() - 1];
  return d;
}

IntVec rim_coefficients(const Fibred4Manifold& M, const Fibred4Manifold& N,
                        const GluingClass& C, const IntVec& K_X0_S) {
  const int g = M.genus;
  if (static_cast<int>(C.a.size()) != 2 * g)
    throw ValidationError("gluing class must have length 2g");
  if (K_X0_S.size() != C.a.size())
    throw ValidationError("K_X0.S vector must have length 2g");
  const Int kn_bn = pair(N.lattice, N.canonical, N.section);
  const Int bn2 = pair(N.lattice, N.section, N.section);
  const Int factor = kn_bn + 1 - (2 * Int(g) - 2) * bn2;
  IntVec r(2 * g);
  for (int i = 0; i < 2 * g; ++i) r[i] = K_X0_S[i] - C.a[i] * factor;
  return r;
}

IntVec default_S_squares(const Fibred4Manifold& M, const Fibred4Manifold& N,
                         const GluingClass& C, const IntVec& K_X0_S) {
  IntVec r = rim_coefficients(M, N, C, K_X0_S);
  IntVec s(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) s[i] = (r[i] % 2 == 0) ? -2 : -1;
  return s;
}

namespace {

std::vector<LatticeVector> perpendicular_block(const Fibred4Manifold& m) {
  return orthogonal_complement(m.lattice, {m.fibre, m.section});
}

/// Assembles the normal-form lattice from P-block Grams, vanishing-surface
/// squares and the section square, and fills all index bookkeeping.
FibreSumResult assemble(std::vector<SummandInfo> summands,
                        const std::vector<IntMat>& p_grams, const IntVec& S_squares,
                        const Int& section_square) {
  FibreSumResult x;
  x.summand_count = static_cast<int>(summands.size());
  x.pair_count = static_cast<int>(S_squares.size());
  x.S_squares = S_squares;

  int rank = 0;
  for (const auto& g : p_grams) rank += static_cast<int>(g.size());
  x.sr_offset = rank;
  rank += 2 * x.pair_count;
  x.b_index = rank;
  x.fibre_index = rank + 1;
  rank += 2;

  IntMat gram = zero_mat(rank, rank);
  NormalFormLabels labels;
  labels.roles.resize(rank);
  int off = 0;
  for (std::size_t s = 0; s < p_grams.size(); ++s) {
    const int w = static_cast<int>(p_grams[s].size());
    summands[s].p_offset = off;
    for (int i = 0; i < w; ++i) {
      labels.roles[off + i] = {BasisRole::Kind::P, static_cast<int>(s), i};
      for (int j = 0; j < w; ++j) gram[off + i][off + j] = p_grams[s][i][j];
    }
    off += w;
  }
  for (int i = 0; i < x.pair_count; ++i) {
    const int si = x.s_index(i), ri = x.r_index(i);
    gram[si][si] = S_squares[i];
    gram[si][ri] = gram[ri][si] = 1;
    labels.roles[si] = {BasisRole::Kind::S, -1, i};
    labels.roles[ri] = {BasisRole::Kind::R, -1, i};
  }
  gram[x.b_index][x.b_index] = section_square;
  gram[x.b_index][x.fibre_index] = gram[x.fibre_index][x.b_index] = 1;
  labels.roles[x.b_index] = {BasisRole::Kind::Section, -1, -1};
  labels.roles[x.fibre_index] = {BasisRole::Kind::Fibre, -1, -1};

  x.labels = std::move(labels);
  x.summands = std::move(summands);
  x.manifold.lattice = IntegralLattice::from_gram(std::move(gram));
  x.manifold.fibre = x.manifold.lattice.basis_vector(x.fibre_index);
  x.manifold.section = x.manifold.lattice.basis_vector(x.b_index);
  return x;
}

}  // namespace

FibreSumResult generalized_fibre_sum(const Fibred4Manifold& M, const Fibred4Manifold& N,
                                     const GluingClass& C, const IntVec& S_squares,
                                     const IntVec& K_X0_S) {
  M.validate();
  N.validate();
  if (M.genus != N.genus)
    throw PreconditionError("fibre sum requires summands of equal fibre genus");
  const int g = M.genus;
  if (static_cast<int>(S_squares.size()) != 2 * g)
    throw ValidationError("S_squares must have length 2g");
  const IntVec r = rim_coefficients(M, N, C, K_X0_S);
  for (int i = 0; i < 2 * g; ++i)
    if ((S_squares[i] - r[i]) % 2 != 0)
      throw PreconditionError("S_i^2 must have the parity of the rim coefficient r_i");

  SummandInfo sm{M, perpendicular_block(M), 0};
  SummandInfo sn{N, perpendicular_block(N), 0};
  const IntMat gm = gram_of(M.lattice, sm.p_basis);
  const IntMat gn = gram_of(N.lattice, sn.p_basis);
  const Int bsq =
      pair(M.lattice, M.section, M.section) + pair(N.lattice, N.section, N.section);

  FibreSumResult x = assemble({std::move(sm), std::move(sn)}, {gm, gn}, S_squares, bsq);
  x.gluing = C;
  x.manifold.name = M.name + "#_Sigma" + N.name;
  x.manifold.euler = M.euler + N.euler + 4 * Int(g) - 4;
  x.manifold.sigma = M.sigma + N.sigma;
  x.manifold.genus = g;
  x.manifold.canonical = gompf_canonical(x, K_X0_S).K;
  x.manifold.validate();
  return x;
}

FibreSumResult generalized_fibre_sum(const Fibred4Manifold& M, const Fibred4Manifold& N,
                                     const GluingClass& C, const IntVec& S_squares) {
  return generalized_fibre_sum(M, N, C, S_squares, zero_vec(S_squares.size()));
}

FibreSumResult iterated_fibre_sum(const Fibred4Manifold& M, int n) {
  if (n < 1) throw PreconditionError("iterated fibre sum requires n >= 1");
  M.validate();
  if (n == 1) {
    FibreSumResult x;
    x.manifold = M;
    x.summand_count = 1;
    x.gluing = GluingClass::zero(M.genus);
    x.summands = {SummandInfo{M, perpendicular_block(M), 0}};
    x.pair_count = 0;
    x.sr_offset = x.b_index = x.fibre_index = -1;
    return x;
  }
  const int g = M.genus;
  const int c = 2 * g * (n - 1);

  SummandInfo proto{M, perpendicular_block(M), 0};
  const IntMat gp = gram_of(M.lattice, proto.p_basis);
  std::vector<SummandInfo> summands(n, proto);
  std::vector<IntMat> p_grams(n, gp);

  FibreSumResult x = assemble(std::move(summands), p_grams, IntVec(c, -2), Int(-n));
  x.gluing = GluingClass::zero(g);
  x.manifold.name = M.name + "(" + std::to_string(n) + ")";
  x.manifold.euler = Int(n) * M.euler + Int(n - 1) * (4 * Int(g) - 4);
  x.manifold.sigma = Int(n) * M.sigma;
  x.manifold.genus = g;
  x.manifold.canonical = canonical_Mn(x).K;
  x.manifold.validate();
  return x;
}

FibreSumResult twisted_sum(int m, int n, const Fibred4Manifold& M, const GluingClass& C) {
  if (m < 1 || n < 1) throw PreconditionError("twisted sum requires m, n >= 1");
  const Fibred4Manifold Mm = iterated_fibre_sum(M, m).manifold;
  const Fibred4Manifold Mn = iterated_fibre_sum(M, n).manifold;
  const IntVec k0 = zero_vec(2 * M.genus);
  FibreSumResult x =
      generalized_fibre_sum(Mm, Mn, C, default_S_squares(Mm, Mn, C, k0), k0);
  x.manifold.name = M.name + "(" + std::to_string(m) + "," + std::to_string(n) + ",C)";
  return x;
}

}  // namespace fibresum
