#include "fibresum/serialize.hpp"

namespace fibresum {

namespace {
const Int kSafeMax = (Int(1) << 53) - 1;
}

Json json_int(const Int& x) {
  if (x <= kSafeMax && x >= -kSafeMax) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError("malformed integer string: " + j.dump());
    }
  }
  throw ValidationError("expected an integer, got: " + j.dump());
}

Json json_int_vec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(int_from_json(e));
  return v;
}

Json lattice_to_json(const IntegralLattice& L) {
  Json j;
  j["rank"] = L.rank();
  Json flat = Json::array();
  for (const auto& row : L.gram)
    for (const Int& x : row) flat.push_back(json_int(x));
  j["gram"] = std::move(flat);
  return j;
}

IntegralLattice lattice_from_json(const Json& j) {
  require_keys(j, {"rank", "gram"}, "lattice");
  if (!j.contains("rank") || !j.contains("gram"))
    throw ValidationError("lattice needs 'rank' and 'gram'");
  const int n = j["rank"].get<int>();
  if (n < 0) throw ValidationError("lattice rank must be non-negative");
  IntVec flat = int_vec_from_json(j["gram"]);
  if (static_cast<int>(flat.size()) != n * n)
    throw ValidationError("gram must have rank*rank row-major entries");
  IntMat g = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) g[i][k] = flat[i * n + k];
  return IntegralLattice::from_gram(std::move(g));
}

Json labels_to_json(const NormalFormLabels& labels) {
  Json a = Json::array();
  for (const auto& r : labels.roles) {
    switch (r.kind) {
      case BasisRole::Kind::P:
        a.push_back("P" + std::to_string(r.summand) + "." + std::to_string(r.index));
        break;
      case BasisRole::Kind::S:
        a.push_back("S" + std::to_string(r.index + 1));
        break;
      case BasisRole::Kind::R:
        a.push_back("R" + std::to_string(r.index + 1));
        break;
      case BasisRole::Kind::Section:
        a.push_back("B");
        break;
      case BasisRole::Kind::Fibre:
        a.push_back("Sigma");
        break;
    }
  }
  return a;
}

Json form_descriptor_to_json(const FormDescriptor& fd) {
  Json j;
  j["rank"] = fd.rank;
  j["signature"] = json_int(fd.signature);
  j["parity"] = to_string(fd.parity);
  j["decomposition"] = fd.decomposition;
  j["classified"] = fd.classified;
  return j;
}

void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) throw ValidationError(where + ": unknown key '" + key + "'");
  }
}

AlgebraicSurfaceData surface_from_json(const Json& j) {
  require_keys(j,
               {"name", "K_squared", "euler", "degree", "lattice", "canonical",
                "hyperplane", "minimal_general_type"},
               "surface");
  for (const char* k :
       {"name", "K_squared", "euler", "degree", "lattice", "canonical", "hyperplane"})
    if (!j.contains(k))
      throw ValidationError(std::string("surface: missing key '") + k + "'");
  AlgebraicSurfaceData s;
  s.name = j["name"].get<std::string>();
  s.K_squared = int_from_json(j["K_squared"]);
  s.euler = int_from_json(j["euler"]);
  s.degree = int_from_json(j["degree"]);
  s.lattice = lattice_from_json(j["lattice"]);
  s.canonical = s.lattice.vector(int_vec_from_json(j["canonical"]));
  s.hyperplane = s.lattice.vector(int_vec_from_json(j["hyperplane"]));
  s.minimal_general_type = j.value("minimal_general_type", false);
  s.validate();
  return s;
}

}  // namespace fibresum
