#include "fibresum/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using fibresum::Json;

int emit(const Json& report, const std::string& output) {
  if (output == "human")
    std::cout << fibresum::render_human(report);
  else
    std::cout << fibresum::render_json(report);
  return fibresum::kExitOk;
}

Json load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fibresum::ValidationError("cannot read manifest: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw fibresum::ValidationError(std::string("malformed manifest: ") + e.what());
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fibretool: exact invariants of Lefschetz fibre sums"};
  app.require_subcommand(1);

  std::string output = "json";
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"json", "human"}));

  std::string manifest_path;
  auto* cmd_run = app.add_subcommand("run", "Execute a manifest file");
  cmd_run->add_option("--manifest", manifest_path, "Manifest path")->required();

  std::string surface = "quintic";
  int n = 1, m = 0;
  std::vector<std::string> c_entries;
  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", surface, "Preset name (E1, quintic, CP2)");
  };
  auto add_sum = [&](CLI::App* cmd, bool with_twist) {
    cmd->add_option("--n", n, "Number of fibre-sum copies");
    if (with_twist) {
      cmd->add_option("--m", m, "First summand count M(m)");
      cmd->add_option("--C", c_entries, "Gluing class entries a_1 .. a_2g");
    }
  };

  auto* cmd_inv = app.add_subcommand("invariants", "Invariants of M(n)");
  add_surface(cmd_inv);
  add_sum(cmd_inv, false);

  auto* cmd_sum = app.add_subcommand("fibresum", "Normal form of M(n) or M(m,n,C)");
  add_surface(cmd_sum);
  add_sum(cmd_sum, true);

  auto* cmd_can = app.add_subcommand("canonical", "Canonical class data");
  add_surface(cmd_can);
  add_sum(cmd_can, true);

  auto* cmd_sw = app.add_subcommand("sw-classes", "Blow-up basic classes");
  add_surface(cmd_sw);

  auto* cmd_mst = app.add_subcommand("mst", "Morgan-Szabo-Taubes induction for M(n)");
  add_surface(cmd_mst);
  add_sum(cmd_mst, false);

  std::string a_str = "0", d_str, n_str = "2";
  auto* cmd_obs = app.add_subcommand("obstruction", "Extension obstruction d | a(n-1)");
  add_surface(cmd_obs);
  cmd_obs->add_option("--a", a_str, "Divisibility of the gluing class")->required();
  cmd_obs->add_option("--n", n_str, "Fibre-sum count")->required();
  cmd_obs->add_option("--d", d_str, "Override the divisibility d of K+Sigma");

  std::string pp_d = "1", pp_s0 = "1", pp_k0 = "1";
  auto* cmd_pp = app.add_subcommand("pencil-params", "Embedding parameters for a target d");
  cmd_pp->add_option("--d", pp_d, "Target divisibility")->required();
  cmd_pp->add_option("--s0", pp_s0, "Ampleness threshold")->required();
  cmd_pp->add_option("--k0", pp_k0, "Very-ampleness threshold")->required();

  auto* cmd_cls = app.add_subcommand("classify", "Homeomorphism type of M(n)");
  add_surface(cmd_cls);
  add_sum(cmd_cls, false);

  std::uint64_t seed = 0;
  int iterations = 25;
  auto* cmd_self = app.add_subcommand("selftest", "Randomized structural checks");
  cmd_self->add_option("--seed", seed, "RNG seed");
  cmd_self->add_option("--iterations", iterations, "Iteration count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_self->parsed()) return emit(fibresum::run_selftest(seed, iterations), output);

    Json manifest;
    if (cmd_run->parsed()) {
      manifest = load_manifest(manifest_path);
      if (manifest.is_object() && manifest.contains("output") && output == "json")
        output = manifest["output"].get<std::string>();
    } else {
      Json op;
      if (cmd_inv->parsed()) op = {{"op", "invariants"}, {"n", n}};
      if (cmd_cls->parsed()) op = {{"op", "classify"}, {"n", n}};
      if (cmd_sw->parsed()) op = {{"op", "sw-classes"}};
      if (cmd_mst->parsed()) op = {{"op", "mst"}, {"n", n}};
      if (cmd_sum->parsed() || cmd_can->parsed()) {
        op["op"] = cmd_sum->parsed() ? "fibresum" : "canonical";
        op["n"] = n;
        if (m > 0) op["m"] = m;
        if (!c_entries.empty()) {
          Json c = Json::array();
          for (const auto& e : c_entries) c.push_back(Json::parse(e));
          op["C"] = c;
        }
      }
      if (cmd_obs->parsed()) {
        op = {{"op", "obstruction"}, {"a", Json::parse(a_str)}, {"n", Json::parse(n_str)}};
        if (!d_str.empty()) op["d"] = Json::parse(d_str);
      }
      if (cmd_pp->parsed())
        op = {{"op", "pencil-params"},
              {"d", Json::parse(pp_d)},
              {"s0", Json::parse(pp_s0)},
              {"k0", Json::parse(pp_k0)}};
      manifest = Json{{"surface", surface}, {"operations", Json::array({op})}};
    }
    return emit(fibresum::run_manifest(manifest), output);
  } catch (const fibresum::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return fibresum::kExitPrecondition;
  } catch (const fibresum::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return fibresum::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fibresum::kExitValidation;
  }
}
