#include "fibresum/random_models.hpp"

namespace fibresum {

LatticeVector characteristic_vector(const IntegralLattice& L) {
  if (!determinant_and_unimodularity(L).second)
    throw PreconditionError("characteristic_vector requires a unimodular lattice");
  const int n = L.rank();
  // Solve Gram x = diag(Gram) over GF(2); Gram is invertible mod 2.
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      a[i][j] = static_cast<int>(((L.gram[i][j] % 2) + 2) % 2);
    a[i][n] = a[i][i];
  }
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col]) {
        pr = r;
        break;
      }
    if (pr < 0) throw PreconditionError("Gram matrix singular mod 2");
    std::swap(a[row], a[pr]);
    for (int r = 0; r < n; ++r) {
      if (r == row || !a[r][col]) continue;
      for (int c = col; c <= n; ++c) a[r][c] ^= a[row][c];
    }
  }
  IntVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return L.vector(std::move(x));
}

Fibred4Manifold random_fibred_manifold(std::mt19937_64& rng, int max_rank,
                                       int max_genus, int min_genus) {
  std::uniform_int_distribution<int> genus_dist(min_genus, max_genus);
  std::uniform_int_distribution<int> bsq_dist(-3, 0);
  std::uniform_int_distribution<int> kind_dist(0, 2);

  const int g = genus_dist(rng);
  const Int bsq = bsq_dist(rng);
  IntegralLattice L = IntegralLattice::from_gram({{bsq, 1}, {1, 0}});
  int extra = std::uniform_int_distribution<int>(0, (max_rank - 2) / 2)(rng);
  for (int i = 0; i < extra; ++i) {
    switch (kind_dist(rng)) {
      case 0:
        L = direct_sum(L, unit_form(1));
        break;
      case 1:
        L = direct_sum(L, unit_form(-1));
        break;
      default:
        L = direct_sum(L, hyperbolic_plane());
        break;
    }
  }

  Fibred4Manifold m;
  m.name = "random";
  m.lattice = L;
  m.section = L.basis_vector(0);
  m.fibre = L.basis_vector(1);
  m.genus = g;

  LatticeVector k = characteristic_vector(L);
  // k.Sigma is even (Sigma^2 = 0); shift by 2tB to reach 2g-2.
  const Int shortfall = 2 * Int(g) - 2 - pair(L, k, m.fibre);
  k = k + (shortfall / 2) * (Int(2) * m.section);
  m.canonical = k;

  const Signature sig = signature(L);
  m.euler = Int(L.rank()) + 2;
  m.sigma = sig.index();
  m.validate();
  return m;
}

GluingClass random_gluing(std::mt19937_64& rng, int genus, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  GluingClass c;
  c.a.resize(2 * genus);
  for (auto& x : c.a) x = d(rng);
  return c;
}

}  // namespace fibresum
