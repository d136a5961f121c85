#pragma once

#include "fibresum/fibre_sum.hpp"
#include "fibresum/manifold.hpp"

#include <json.hpp>

namespace fibresum {

// Insertion-ordered so that reports are byte-reproducible across runs.
using Json = nlohmann::ordered_json;

/// Integers within the 53-bit safe range are emitted as JSON numbers, larger
/// ones as decimal strings.
Json json_int(const Int& x);
Int int_from_json(const Json& j);

Json json_int_vec(const IntVec& v);
IntVec int_vec_from_json(const Json& j);

/// {"rank": n, "gram": [row-major entries]}
Json lattice_to_json(const IntegralLattice& L);
IntegralLattice lattice_from_json(const Json& j);

Json labels_to_json(const NormalFormLabels& labels);

Json form_descriptor_to_json(const FormDescriptor& fd);

/// Rejects keys outside the allowed set.
void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::string& where);

AlgebraicSurfaceData surface_from_json(const Json& j);

}  // namespace fibresum
