#include "fibresum/obstruction.hpp"

namespace fibresum {

bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

Int positive_mod(const Int& x, const Int& d) {
  Int r = x % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

ObstructionVerdict extension_obstructed(const Int& d, const Int& a, const Int& n,
                                        std::optional<Int> genus) {
  if (d < 0 || a < 0) throw ValidationError("d and a must be non-negative");
  if (n < 1) throw PreconditionError("n must be a positive integer");
  if (genus && !divides(d, 2 * *genus - 2))
    throw PreconditionError("d must divide 2g-2");

  ObstructionVerdict v;
  v.d = d;
  v.a = a;
  v.n = n;
  // d | 2g-2 makes the full and the reduced criterion equivalent.
  const Int twist =
      genus ? Int(a * ((2 * *genus - 1) * n - 1)) : Int(a * (n - 1));
  v.obstructed = !divides(d, a * (n - 1));

  if (d > 0) {
    Int m = positive_mod(2 - n, d);
    if (m == 0) m = d;
    v.witness_m = m;
    v.div_untwisted = gcd(m + n - 2, d);
    v.div_twisted = gcd3(m + n - 2, twist, d);
  } else if (!v.obstructed) {
    v.witness_m = 1;
    v.div_untwisted = abs(n - 1);
    v.div_twisted = gcd(n - 1, twist);
  } else {
    // d = 0: the untwisted divisibility is m+n-2 itself, so pick the least m
    // for which m+n-2 is positive and does not divide the twisting term.
    Int m = 1;
    while (m + n - 2 <= 0 || divides(m + n - 2, twist)) ++m;
    v.witness_m = m;
    v.div_untwisted = m + n - 2;
    v.div_twisted = gcd(m + n - 2, twist);
  }
  return v;
}

PencilParams choose_pencil_params(const Int& d, const Int& s0, const Int& k0) {
  if (d < 1 || s0 < 1 || k0 < 1)
    throw PreconditionError("pencil parameters require d, s0, k0 >= 1");
  PencilParams p;
  p.d = d;
  p.s0 = s0;
  p.k0 = k0;
  p.s = ((s0 + d - 1) / d) * d;
  p.k = k0 + positive_mod(-1 - k0, d);
  return p;
}

Int ample_threshold(const Int& K2, const Int& KL, const Int& L2) {
  if (L2 <= 0) throw PreconditionError("ample_threshold requires L^2 > 0");
  if (KL < 0) throw PreconditionError("ample_threshold requires K.L >= 0");
  Int s = 1;
  while (K2 + 2 * s * KL + s * s * L2 <= 0) ++s;
  return s;
}

Int section_genus(const Int& K2, const Int& KL, const Int& L2, const Int& s,
                  const Int& k) {
  if (k == 0) throw PreconditionError("k = 0 gives an empty section");
  const Int sigma_sq = k * k * (K2 + 2 * s * KL + s * s * L2);
  const Int k_sigma = k * (K2 + s * KL);
  const Int sum = sigma_sq + k_sigma;
  if (sum % 2 != 0)
    throw PreconditionError("non-integer genus: inconsistent embedding data");
  return 1 + sum / 2;
}

PencilParams with_embedding(PencilParams p, const Int& K2, const Int& KL,
                            const Int& L2) {
  p.degree = p.k * p.k * (K2 + 2 * p.s * KL + p.s * p.s * L2);
  p.genus = section_genus(K2, KL, L2, p.s, p.k);
  if (!divides(p.d, 2 * p.genus - 2))
    throw PreconditionError("pencil parameters do not satisfy d | 2g-2");
  return p;
}

}  // namespace fibresum
