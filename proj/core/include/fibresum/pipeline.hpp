#pragma once

#include "fibresum/serialize.hpp"

#include <string>

namespace fibresum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecondition = 3;

/// Validates and executes a manifest document, returning the report.
/// Throws ValidationError / PreconditionError on failure.
Json run_manifest(const Json& manifest);

/// Renders a report as indented JSON (the byte-stable on-disk format).
std::string render_json(const Json& report);

/// Renders a report in a human-readable key/value layout.
std::string render_human(const Json& report);

/// Randomized structural self test; returns a short summary report.
Json run_selftest(std::uint64_t seed, int iterations = 25);

}  // namespace fibresum
