#include "fibresum/lattice.hpp"

#include <atomic>
#include <utility>

namespace fibresum {

namespace {

std::uint64_t next_lattice_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

void check_same_lattice(const IntegralLattice& L, const LatticeVector& v) {
  if (v.lattice_id != L.id)
    throw ValidationError("vector does not belong to this lattice");
  if (static_cast<int>(v.coords.size()) != L.rank())
    throw ValidationError("vector length does not match lattice rank");
}

}  // namespace

IntegralLattice IntegralLattice::from_gram(IntMat g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].size() != n) throw ValidationError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (g[i][j] != g[j][i]) throw ValidationError("Gram matrix is not symmetric");
  }
  IntegralLattice L;
  L.gram = std::move(g);
  L.id = next_lattice_id();
  return L;
}

LatticeVector IntegralLattice::vector(IntVec coords) const {
  if (static_cast<int>(coords.size()) != rank())
    throw ValidationError("coordinate vector length does not match lattice rank");
  return LatticeVector{std::move(coords), id};
}

LatticeVector IntegralLattice::zero() const { return LatticeVector{zero_vec(rank()), id}; }

LatticeVector IntegralLattice::basis_vector(int i) const {
  if (i < 0 || i >= rank()) throw ValidationError("basis index out of range");
  IntVec c = zero_vec(rank());
  c[i] = 1;
  return LatticeVector{std::move(c), id};
}

static void check_addable(const LatticeVector& a, const LatticeVector& b) {
  if (a.lattice_id != b.lattice_id || a.coords.size() != b.coords.size())
    throw ValidationError("vectors live in different lattices");
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  check_addable(a, b);
  LatticeVector r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  check_addable(a, b);
  LatticeVector r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r = a;
  for (Int& c : r.coords) c = -c;
  return r;
}

LatticeVector operator*(const Int& c, const LatticeVector& v) {
  LatticeVector r = v;
  for (Int& x : r.coords) x *= c;
  return r;
}

Int pair(const IntegralLattice& L, const LatticeVector& v, const LatticeVector& w) {
  check_same_lattice(L, v);
  check_same_lattice(L, w);
  Int acc = 0;
  const int n = L.rank();
  for (int i = 0; i < n; ++i) {
    if (v.coords[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < n; ++j) row += L.gram[i][j] * w.coords[j];
    acc += v.coords[i] * row;
  }
  return acc;
}

IntegralLattice direct_sum(const IntegralLattice& A, const IntegralLattice& B) {
  const int na = A.rank(), nb = B.rank();
  IntMat g = zero_mat(na + nb, na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) g[i][j] = A.gram[i][j];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) g[na + i][na + j] = B.gram[i][j];
  return IntegralLattice::from_gram(std::move(g));
}

Signature signature(const IntegralLattice& L) {
  const int n = L.rank();
  // Work on a rational copy; apply congruence transformations only.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j]);

  auto swap_sym = [&](int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  // row j += row k, col j += col k
  auto add_sym = [&](int j, int k) {
    for (int c = 0; c < n; ++c) a[j][c] += a[k][c];
    for (int r = 0; r < n; ++r) a[r][j] += a[r][k];
  };

  Signature sig;
  int i = 0;
  while (i < n) {
    if (a[i][i] == 0) {
      int pivot = -1;
      for (int j = i + 1; j < n; ++j)
        if (a[j][j] != 0) {
          pivot = j;
          break;
        }
      if (pivot >= 0) {
        swap_sym(i, pivot);
      } else {
        // all remaining diagonal entries are zero; look for an off-diagonal one
        int pj = -1, pk = -1;
        for (int j = i; j < n && pj < 0; ++j)
          for (int k = j + 1; k < n; ++k)
            if (a[j][k] != 0) {
              pj = j;
              pk = k;
              break;
            }
        if (pj < 0) {
          sig.b_zero += n - i;
          break;
        }
        add_sym(pj, pk);  // makes a[pj][pj] = 2*a[pj][pk] != 0
        swap_sym(i, pj);
      }
    }
    const Rat p = a[i][i];
    for (int r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      const Rat f = a[r][i] / p;
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[i][c];
      for (int c = 0; c < n; ++c) a[c][r] -= f * a[c][i];
    }
    if (p > 0)
      ++sig.b_plus;
    else
      ++sig.b_minus;
    ++i;
  }
  return sig;
}

namespace {

Int determinant_dense(const IntMat& m);

/// Splits the index set into connected components of the nonzero pattern
/// (symmetrized).  A matrix that is block-diagonal up to a simultaneous
/// row/column permutation has det = product of its component determinants,
/// which keeps the normal-form lattices (many small orthogonal blocks) cheap.
std::vector<std::vector<int>> support_components(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != 0 || m[j][i] != 0) root[find(i)] = find(j);
  std::vector<std::vector<int>> comps(n);
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::erase_if(comps, [](const auto& c) { return c.empty(); });
  return comps;
}

Int determinant_split(const IntMat& m) {
  const auto comps = support_components(m);
  if (comps.size() <= 1) return determinant_dense(m);
  Int det = 1;
  for (const auto& idx : comps) {
    const int s = static_cast<int>(idx.size());
    IntMat sub(s, IntVec(s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) sub[i][j] = m[idx[i]][idx[j]];
    det *= determinant_dense(sub);
    if (det == 0) return 0;
  }
  return det;
}

Int determinant_dense(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  IntMat a = m;
  // Bareiss fraction-free elimination.
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Int determinant(const IntMat& m) { return determinant_split(m); }

std::pair<Int, bool> determinant_and_unimodularity(const IntegralLattice& L) {
  Int d = determinant(L.gram);
  return {d, d == 1 || d == -1};
}

Parity parity(const IntegralLattice& L) {
  for (int i = 0; i < L.rank(); ++i)
    if (L.gram[i][i] % 2 != 0) return Parity::Odd;
  return Parity::Even;
}

bool is_characteristic(const IntegralLattice& L, const LatticeVector& k) {
  check_same_lattice(L, k);
  const int n = L.rank();
  // k.e_i == e_i.e_i (mod 2) on a basis suffices by mod-2 linearity.
  for (int i = 0; i < n; ++i) {
    Int p = 0;
    for (int j = 0; j < n; ++j) p += L.gram[i][j] * k.coords[j];
    if ((p - L.gram[i][i]) % 2 != 0) return false;
  }
  return true;
}

Int divisibility(const IntegralLattice& L, const LatticeVector& v) {
  check_same_lattice(L, v);
  if (!determinant_and_unimodularity(L).second)
    throw PreconditionError("divisibility requires a unimodular lattice");
  const int n = L.rank();
  IntVec pairings(n);
  for (int i = 0; i < n; ++i) {
    Int p = 0;
    for (int j = 0; j < n; ++j) p += L.gram[i][j] * v.coords[j];
    pairings[i] = p;
  }
  Int g = gcd_all(pairings);
  return g < 0 ? Int(-g) : g;
}

std::vector<IntVec> integer_kernel(const IntMat& a, int n) {
  const int s = static_cast<int>(a.size());
  IntMat m = a;  // s x n, column-reduced in place
  // u tracks the unimodular column operations; kernel = trailing columns of u.
  IntMat u = zero_mat(n, n);
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto col_sub = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < s; ++r) m[r][dst] -= f * m[r][src];
    for (int r = 0; r < n; ++r) u[r][dst] -= f * u[r][src];
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s; ++r) std::swap(m[r][i], m[r][j]);
    for (int r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
  };

  int lead = 0;
  for (int row = 0; row < s && lead < n; ++row) {
    // gcd-reduce entries of this row across columns >= lead
    while (true) {
      int best = -1;
      for (int j = lead; j < n; ++j) {
        if (m[row][j] == 0) continue;
        if (best < 0 || abs(m[row][j]) < abs(m[row][best])) best = j;
      }
      if (best < 0) break;  // row already zero on the free columns
      bool done = true;
      for (int j = lead; j < n; ++j) {
        if (j == best || m[row][j] == 0) continue;
        Int q = m[row][j] / m[row][best];
        col_sub(j, best, q);
        if (m[row][j] != 0) done = false;
      }
      if (done) {
        col_swap(lead, best);
        ++lead;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (int j = lead; j < n; ++j) {
    IntVec v(n);
    for (int r = 0; r < n; ++r) v[r] = u[r][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntMat gram_of(const IntegralLattice& L, const std::vector<LatticeVector>& vecs) {
  const std::size_t s = vecs.size();
  IntMat g = zero_mat(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = pair(L, vecs[i], vecs[j]);
  return g;
}

std::vector<LatticeVector> orthogonal_complement(const IntegralLattice& L,
                                                 const std::vector<LatticeVector>& span) {
  const int n = L.rank();
  const int s = static_cast<int>(span.size());
  for (const auto& v : span) check_same_lattice(L, v);
  const IntMat span_gram = gram_of(L, span);
  const Int d = determinant(span_gram);
  if (d != 1 && d != -1)
    throw PreconditionError("span does not generate a unimodular sublattice");

  // Kernel of the pairing matrix A[t][j] = <span_t, e_j>.
  IntMat a = zero_mat(s, n);
  for (int t = 0; t < s; ++t)
    for (int j = 0; j < n; ++j) {
      Int p = 0;
      for (int k = 0; k < n; ++k) p += L.gram[j][k] * span[t].coords[k];
      a[t][j] = p;
    }
  std::vector<IntVec> ker = integer_kernel(a, n);
  if (static_cast<int>(ker.size()) != n - s)
    throw PreconditionError("span is linearly dependent");
  std::vector<LatticeVector> basis;
  basis.reserve(ker.size());
  for (auto& v : ker) basis.push_back(LatticeVector{std::move(v), L.id});
  return basis;
}

std::optional<IntVec> solve_integer(const IntMat& columns, const IntVec& rhs) {
  const int m = static_cast<int>(rhs.size());           // equation count
  const int n = static_cast<int>(columns.size());       // unknowns
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1));
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(columns[j].size()) != m)
      throw ValidationError("solve_integer: column length mismatch");
    for (int i = 0; i < m; ++i) a[i][j] = Rat(columns[j][i]);
  }
  for (int i = 0; i < m; ++i) a[i][n] = Rat(rhs[i]);

  std::vector<int> pivot_col_of_row(m, -1);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int pr = -1;
    for (int r = row; r < m; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    const Rat p = a[row][col];
    for (int c = col; c <= n; ++c) a[row][c] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col_of_row[row] = col;
    ++row;
  }
  // inconsistent?
  for (int r = row; r < m; ++r)
    if (a[r][n] != 0) return std::nullopt;

  IntVec x(n, 0);
  for (int r = 0; r < row; ++r) {
    const int c = pivot_col_of_row[r];
    const Rat& v = a[r][n];
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    x[c] = boost::multiprecision::numerator(v);
  }
  return x;
}

FormDescriptor classify_indefinite_unimodular(const IntegralLattice& L) {
  FormDescriptor fd;
  fd.rank = L.rank();
  fd.parity = parity(L);
  const Signature sig = signature(L);
  fd.signature = sig.index();
  if (sig.b_zero > 0) {
    fd.decomposition = "unclassified degenerate";
    return fd;
  }
  if (!determinant_and_unimodularity(L).second)
    throw PreconditionError("classification requires a unimodular lattice");
  if (sig.b_plus == 0 || sig.b_minus == 0) {
    fd.decomposition = "unclassified definite";
    return fd;
  }
  if (fd.parity == Parity::Odd) {
    const int p = sig.b_plus, q = sig.b_minus;
    fd.decomposition =
        std::to_string(p) + "⟨1⟩ ⊕ " + std::to_string(q) + "⟨-1⟩";
  } else {
    // even indefinite: signature is divisible by 8
    const Int s = fd.signature;
    const int a = static_cast<int>(abs(s) / 8);
    const int b = (fd.rank - 8 * a) / 2;
    std::string out;
    if (a > 0) {
      out = std::to_string(a) + "·E8(" + (s > 0 ? "+1" : "-1") + ")";
      if (b > 0) out += " ⊕ ";
    }
    if (b > 0 || a == 0) out += std::to_string(b) + "·H";
    fd.decomposition = out;
  }
  fd.classified = true;
  return fd;
}

IntegralLattice hyperbolic_plane() {
  return IntegralLattice::from_gram({{0, 1}, {1, 0}});
}

IntegralLattice unit_form(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("unit form sign must be +-1");
  return IntegralLattice::from_gram({{Int(sign)}});
}

IntegralLattice diagonal_form(const std::vector<int>& signs) {
  const std::size_t n = signs.size();
  IntMat g = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) g[i][i] = signs[i];
  return IntegralLattice::from_gram(std::move(g));
}

IntegralLattice e8_form(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("E8 form sign must be +-1");
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMat g = zero_mat(8, 8);
  for (int i = 0; i < 8; ++i) g[i][i] = 2 * sign;
  auto link = [&](int i, int j) { g[i][j] = g[j][i] = -sign; };
  for (int i = 0; i < 6; ++i) link(i, i + 1);
  link(4, 7);
  return IntegralLattice::from_gram(std::move(g));
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.b_plus) + "," + std::to_string(s.b_minus) + "," +
         std::to_string(s.b_zero) + ")";
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace fibresum
