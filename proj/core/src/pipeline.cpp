#include "fibresum/pipeline.hpp"

#include "fibresum/canonical.hpp"
#include "fibresum/obstruction.hpp"
#include "fibresum/random_models.hpp"
#include "fibresum/seiberg_witten.hpp"

#include <sstream>

namespace fibresum {

namespace {

Fibred4Manifold resolve_surface(const Json& j) {
  if (j.is_string()) return preset_manifold(j.get<std::string>());
  const AlgebraicSurfaceData s = surface_from_json(j);
  return blow_up(s, s.degree);
}

Json invariant_block(const Fibred4Manifold& m) {
  Json b;
  b["e"] = json_int(m.euler);
  b["sigma"] = json_int(m.sigma);
  b["b2"] = json_int(m.b2());
  b["b2_plus"] = json_int(m.b2_plus());
  b["parity"] = to_string(parity(m.lattice));
  b["spin"] = is_spin(m);
  b["genus"] = m.genus;
  b["K_dot_fibre"] = json_int(pair(m.lattice, m.canonical, m.fibre));
  b["K_dot_section"] = json_int(pair(m.lattice, m.canonical, m.section));
  b["K_divisibility"] = json_int(divisibility(m.lattice, m.canonical));
  const Signature sig = signature(m.lattice);
  if (sig.b_plus > 0 && sig.b_minus > 0 && sig.b_zero == 0)
    b["form"] = classify_indefinite_unimodular(m.lattice).decomposition;
  return b;
}

struct SumSpec {
  int m = 0;  // 0 means plain M(n)
  int n = 1;
  GluingClass C;
  bool twisted = false;
};

SumSpec parse_sum_spec(const Json& op, const Fibred4Manifold& M) {
  SumSpec s;
  s.n = op.value("n", 1);
  if (s.n < 1) throw ValidationError("'n' must be a positive integer");
  if (op.contains("m")) {
    s.m = op["m"].get<int>();
    if (s.m < 1) throw ValidationError("'m' must be a positive integer");
    s.twisted = true;
  }
  if (op.contains("C")) {
    if (!s.twisted) throw ValidationError("'C' requires both 'm' and 'n'");
    s.C.a = int_vec_from_json(op["C"]);
  } else {
    s.C = GluingClass::zero(M.genus);
  }
  return s;
}

FibreSumResult build_sum(const SumSpec& s, const Fibred4Manifold& M) {
  if (s.twisted) return twisted_sum(s.m, s.n, M, s.C);
  return iterated_fibre_sum(M, s.n);
}

Json op_invariants(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "n"}, "invariants");
  const int n = op.value("n", 1);
  const FibreSumResult x = iterated_fibre_sum(M, n);
  Json r;
  r["op"] = "invariants";
  r["n"] = n;
  r["name"] = x.manifold.name;
  r["invariants"] = invariant_block(x.manifold);
  r["singular_fibres"] = json_int(count_singular_fibres(x.manifold));
  return r;
}

Json op_fibresum(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "m", "n", "C"}, "fibresum");
  const SumSpec s = parse_sum_spec(op, M);
  const FibreSumResult x = build_sum(s, M);
  Json r;
  r["op"] = "fibresum";
  if (s.twisted) r["m"] = s.m;
  r["n"] = s.n;
  if (s.twisted) r["C"] = json_int_vec(s.C.a);
  r["name"] = x.manifold.name;
  r["invariants"] = invariant_block(x.manifold);
  r["labels"] = labels_to_json(x.labels);
  r["S_squares"] = json_int_vec(x.S_squares);
  r["lattice"] = lattice_to_json(x.manifold.lattice);
  r["K"] = json_int_vec(x.manifold.canonical.coords);
  return r;
}

Json op_canonical(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "m", "n", "C"}, "canonical");
  const SumSpec s = parse_sum_spec(op, M);
  const FibreSumResult x = build_sum(s, M);
  const CanonicalData data =
      s.twisted ? canonical_MmnC(x, s.m, s.n) : canonical_Mn(x);
  const auto& X = x.manifold;
  Json r;
  r["op"] = "canonical";
  if (s.twisted) r["m"] = s.m;
  r["n"] = s.n;
  r["b_coeff"] = json_int(data.b_coeff);
  r["sigma_coeff"] = json_int(data.sigma_coeff);
  r["r"] = json_int_vec(data.r);
  r["K_dot_fibre"] = json_int(pair(X.lattice, data.K, X.fibre));
  r["K_dot_section"] = json_int(pair(X.lattice, data.K, X.section));
  const Int div_direct = divisibility(X.lattice, data.K);
  const Int div_gcd = s.twisted ? div_K_MmnC(M, s.m, s.n, s.C) : div_K_Mn(M, s.n);
  r["div_lattice"] = json_int(div_direct);
  r["div_gcd_formula"] = json_int(div_gcd);
  r["agree"] = div_direct == div_gcd;
  return r;
}

Json op_sw_classes(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op"}, "sw-classes");
  const BasicClassSet all = basic_classes_blowup(M);
  const BasicClassSet maximal =
      max_fibre_filter(all, M.lattice, M.fibre, M.genus);
  Json r;
  r["op"] = "sw-classes";
  r["count"] = static_cast<int>(all.size());
  r["max_fibre_count"] = static_cast<int>(maximal.size());
  const bool canonical_survives =
      maximal.size() == 1 && maximal.entries.front().cls == M.canonical;
  r["surviving_is_canonical"] = canonical_survives;
  return r;
}

Json op_mst(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "n"}, "mst");
  const int n = op.value("n", 2);
  const MnBasicClasses result = basic_classes_Mn_fibre_nonzero(M, n);
  Json r;
  r["op"] = "mst";
  r["n"] = n;
  r["classes"] = static_cast<int>(result.classes.size());
  Int mag = 0;
  for (const auto& e : result.classes.entries) mag = abs(e.sw);
  r["sw_magnitude"] = json_int(mag);
  r["K_divisibility"] =
      json_int(divisibility(result.X.manifold.lattice, result.X.manifold.canonical));
  return r;
}

Json op_obstruction(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "a", "n", "d"}, "obstruction");
  if (!op.contains("a") || !op.contains("n"))
    throw ValidationError("obstruction needs 'a' and 'n'");
  const Int a = int_from_json(op["a"]);
  const Int n = int_from_json(op["n"]);
  const Int d = op.contains("d") ? int_from_json(op["d"]) : d_of(M);
  const ObstructionVerdict v = extension_obstructed(d, a, n, Int(M.genus));
  Json r;
  r["op"] = "obstruction";
  r["d"] = json_int(v.d);
  r["a"] = json_int(v.a);
  r["n"] = json_int(v.n);
  r["obstructed"] = v.obstructed;
  r["witness_m"] = json_int(*v.witness_m);
  r["div_untwisted"] = json_int(v.div_untwisted);
  r["div_twisted"] = json_int(v.div_twisted);
  return r;
}

Json op_pencil_params(const Json& op) {
  require_keys(op, {"op", "d", "s0", "k0"}, "pencil-params");
  for (const char* k : {"d", "s0", "k0"})
    if (!op.contains(k))
      throw ValidationError(std::string("pencil-params needs '") + k + "'");
  const PencilParams p = choose_pencil_params(
      int_from_json(op["d"]), int_from_json(op["s0"]), int_from_json(op["k0"]));
  Json r;
  r["op"] = "pencil-params";
  r["d"] = json_int(p.d);
  r["s0"] = json_int(p.s0);
  r["k0"] = json_int(p.k0);
  r["s"] = json_int(p.s);
  r["k"] = json_int(p.k);
  return r;
}

Json op_classify(const Json& op, const Fibred4Manifold& M) {
  require_keys(op, {"op", "n"}, "classify");
  const int n = op.value("n", 1);
  const FibreSumResult x = iterated_fibre_sum(M, n);
  Json r;
  r["op"] = "classify";
  r["n"] = n;
  r["form"] = form_descriptor_to_json(classify_homeo(x.manifold));
  return r;
}

}  // namespace

Json run_manifest(const Json& manifest) {
  require_keys(manifest, {"surface", "embedding", "operations", "output"}, "manifest");
  if (!manifest.contains("surface") || !manifest.contains("operations"))
    throw ValidationError("manifest needs 'surface' and 'operations'");
  if (manifest.contains("embedding"))
    require_keys(manifest["embedding"], {"s", "k"}, "embedding");
  if (manifest.contains("output")) {
    const std::string o = manifest["output"].get<std::string>();
    if (o != "json" && o != "human")
      throw ValidationError("output must be 'json' or 'human'");
  }
  const Fibred4Manifold M = resolve_surface(manifest["surface"]);

  Json report;
  Json surface;
  surface["name"] = M.name;
  surface["genus"] = M.genus;
  surface["e"] = json_int(M.euler);
  surface["sigma"] = json_int(M.sigma);
  surface["d"] = json_int(d_of(M));
  report["surface"] = std::move(surface);
  if (manifest.contains("embedding")) report["embedding"] = manifest["embedding"];

  Json results = Json::array();
  if (!manifest["operations"].is_array())
    throw ValidationError("'operations' must be an array");
  for (const auto& op : manifest["operations"]) {
    if (!op.is_object() || !op.contains("op"))
      throw ValidationError("each operation needs an 'op' key");
    const std::string name = op["op"].get<std::string>();
    if (name == "invariants")
      results.push_back(op_invariants(op, M));
    else if (name == "fibresum")
      results.push_back(op_fibresum(op, M));
    else if (name == "canonical")
      results.push_back(op_canonical(op, M));
    else if (name == "sw-classes")
      results.push_back(op_sw_classes(op, M));
    else if (name == "mst")
      results.push_back(op_mst(op, M));
    else if (name == "obstruction")
      results.push_back(op_obstruction(op, M));
    else if (name == "pencil-params")
      results.push_back(op_pencil_params(op));
    else if (name == "classify")
      results.push_back(op_classify(op, M));
    else
      throw ValidationError("unknown operation: " + name);
  }
  report["results"] = std::move(results);
  return report;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render_lines(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      render_lines(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && j.size() > 12) {
    out << prefix << ": [" << j.size() << " entries]\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::ostringstream out;
  render_lines(report, "", out);
  return out.str();
}

Json run_selftest(std::uint64_t seed, int iterations) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < iterations; ++i) {
    Fibred4Manifold M = random_fibred_manifold(rng);
    Fibred4Manifold N = random_fibred_manifold(rng, 10, M.genus, M.genus);
    const GluingClass C = random_gluing(rng, M.genus);
    const IntVec k0 = zero_vec(2 * M.genus);
    const FibreSumResult x =
        generalized_fibre_sum(M, N, C, default_S_squares(M, N, C, k0), k0);
    x.manifold.validate();
    if (x.manifold.sigma != M.sigma + N.sigma)
      throw PreconditionError("selftest: signature additivity failed");
    if (x.manifold.b2() != M.b2() + N.b2() + 4 * Int(M.genus) - 2)
      throw PreconditionError("selftest: rank formula failed");
  }
  Json r;
  r["selftest"] = "ok";
  r["seed"] = seed;
  r["iterations"] = iterations;
  return r;
}

}  // namespace fibresum
