#include "fibresum/seiberg_witten.hpp"

#include <algorithm>

namespace fibresum {

void BasicClassSet::sort() {
  std::sort(entries.begin(), entries.end(),
            [](const BasicClassEntry& a, const BasicClassEntry& b) {
              return a.cls.coords < b.cls.coords;
            });
}

BasicClassSet basic_classes_blowup(const Fibred4Manifold& M) {
  if (!M.minimal_general_type_base)
    throw PreconditionError(M.name + ": blow-up enumeration needs a minimal "
                                     "general-type base");
  if (M.b2_plus() <= 1)
    throw PreconditionError(M.name + ": blow-up enumeration needs b2+ > 1");
  const int r = static_cast<int>(M.exceptional.size());

  LatticeVector base_k = M.canonical;
  for (const auto& e : M.exceptional) base_k = base_k - e;

  BasicClassSet out;
  out.entries.reserve(std::size_t(2) << r);
  for (int mask = 0; mask < (1 << r); ++mask) {
    LatticeVector l = base_k;
    for (int i = 0; i < r; ++i)
      l = (mask >> i) & 1 ? l - M.exceptional[i] : l + M.exceptional[i];
    out.entries.push_back({l, 1});
    out.entries.push_back({-l, -1});
  }
  out.sort();
  return out;
}

BasicClassSet max_fibre_filter(const BasicClassSet& s, const IntegralLattice& L,
                               const LatticeVector& fibre, int g, int sign) {
  if (g < 2) throw PreconditionError("max_fibre_filter requires g >= 2");
  if (sign != 1 && sign != -1)
    throw ValidationError("filter sign must be +-1");
  const Int target = Int(sign) * (2 * Int(g) - 2);
  BasicClassSet out;
  for (const auto& e : s.entries)
    if (pair(L, e.cls, fibre) == target) out.entries.push_back(e);
  return out;
}

CharacteristicDecomposition decompose_characteristic(const FibreSumResult& X,
                                                     const LatticeVector& k,
                                                     bool basic_mode) {
  if (X.summand_count != 2)
    throw PreconditionError("decompose_characteristic needs a binary sum");
  if (k.lattice_id != X.manifold.lattice.id)
    throw ValidationError("class does not live in the sum's lattice");
  if (basic_mode && !is_characteristic(X.manifold.lattice, k))
    throw PreconditionError("class is not characteristic");

  CharacteristicDecomposition d;
  const auto slice = [&](const SummandInfo& s) {
    const int w = static_cast<int>(s.p_basis.size());
    return IntVec(k.coords.begin() + s.p_offset, k.coords.begin() + s.p_offset + w);
  };
  d.p_M = slice(X.summands[0]);
  d.p_N = slice(X.summands[1]);
  d.eps.resize(X.pair_count);
  d.s_coeffs.resize(X.pair_count);
  for (int i = 0; i < X.pair_count; ++i) {
    d.eps[i] = k.coords[X.r_index(i)];
    d.s_coeffs[i] = k.coords[X.s_index(i)];
    if (basic_mode && d.s_coeffs[i] != 0)
      throw PreconditionError("basic class has a vanishing-surface component");
  }
  d.b_coeff = k.coords[X.b_index];
  d.beta = k.coords[X.fibre_index];
  return d;
}

namespace {

struct DecomposedEntry {
  SummandDecomposition dec;
  Int sw;
};

std::vector<DecomposedEntry> decompose_all(const SummandInfo& s,
                                           const BasicClassSet& classes) {
  std::vector<DecomposedEntry> out;
  out.reserve(classes.entries.size());
  for (const auto& e : classes.entries)
    out.push_back({decompose_in_summand(s, e.cls), e.sw});
  return out;
}

Int mst_sum_decomposed(const CharacteristicDecomposition& k_dec, int g,
                       const std::vector<DecomposedEntry>& sm,
                       const std::vector<DecomposedEntry>& sn) {
  if (g < 2) throw PreconditionError("the MST formula works only if g >= 2");
  const Int two_g_2 = 2 * Int(g) - 2;
  if (k_dec.b_coeff != two_g_2)
    throw PreconditionError("the MST formula applies only when k.Sigma = 2g-2");
  Int acc = 0;
  for (const auto& a : sm) {
    if (a.dec.section_coeff != two_g_2 || a.dec.p != k_dec.p_M) continue;
    for (const auto& b : sn) {
      if (b.dec.section_coeff != two_g_2 || b.dec.p != k_dec.p_N) continue;
      if (k_dec.beta == a.dec.fibre_coeff + b.dec.fibre_coeff + 2) acc += a.sw * b.sw;
    }
  }
  return acc;
}

}  // namespace

Int mst_sum(const FibreSumResult& X, const CharacteristicDecomposition& k_dec,
            const BasicClassSet& SM, const BasicClassSet& SN) {
  return mst_sum_decomposed(k_dec, X.manifold.genus,
                            decompose_all(X.summands[0], SM),
                            decompose_all(X.summands[1], SN));
}

MnBasicClasses basic_classes_Mn_fibre_nonzero(const Fibred4Manifold& M, int n) {
  if (n < 2) throw PreconditionError("basic_classes_Mn requires n >= 2");
  if (M.genus < 2)
    throw PreconditionError("basic_classes_Mn requires fibre genus >= 2");
  const BasicClassSet blowup = basic_classes_blowup(M);
  const int g = M.genus;
  const Int two_g_2 = 2 * Int(g) - 2;
  const IntVec k0 = zero_vec(2 * g);
  const GluingClass c0 = GluingClass::zero(g);
  const IntVec spheres(2 * g, -2);

  Fibred4Manifold prev = M;
  BasicClassSet prev_classes = blowup;
  FibreSumResult x;
  for (int step = 2; step <= n; ++step) {
    x = generalized_fibre_sum(M, prev, c0, spheres, k0);
    const LatticeVector& K = x.manifold.canonical;
    const auto k_dec = decompose_characteristic(x, K);
    const auto sm = decompose_all(x.summands[0], blowup);
    const auto sn = decompose_all(x.summands[1], prev_classes);
    const Int sw_k = mst_sum_decomposed(k_dec, g, sm, sn);
    if (abs(sw_k) != 1)
      throw PreconditionError("MST did not yield |SW(K)| = 1 for " + x.manifold.name);

    // Every other maximal-pairing candidate from the grid must sum to zero.
    for (const auto& d1 : sm) {
      for (const auto& d2 : sn) {
        CharacteristicDecomposition cand;
        cand.p_M = d1.dec.p;
        cand.p_N = d2.dec.p;
        cand.eps = zero_vec(x.pair_count);
        cand.s_coeffs = zero_vec(x.pair_count);
        cand.b_coeff = two_g_2;
        cand.beta = d1.dec.fibre_coeff + d2.dec.fibre_coeff + 2;
        const bool is_canonical = cand.p_M == k_dec.p_M && cand.p_N == k_dec.p_N &&
                                  cand.beta == k_dec.beta;
        const Int v = mst_sum_decomposed(cand, g, sm, sn);
        if (!is_canonical && v != 0)
          throw PreconditionError("unexpected nonzero MST sum for a non-canonical "
                                  "candidate of " + x.manifold.name);
      }
    }

    BasicClassSet next;
    next.entries = {{K, sw_k}, {-K, -sw_k}};
    next.sort();
    prev_classes = next;
    prev = x.manifold;
  }
  return MnBasicClasses{std::move(x), std::move(prev_classes)};
}

}  // namespace fibresum
