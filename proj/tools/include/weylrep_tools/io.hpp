#pragma once

// JSON and text serialization for the command-line tool and the tests.

#include <string>

#include <json.hpp>

#include "weylrep/affine.hpp"
#include "weylrep/chevalley.hpp"
#include "weylrep/rootsys.hpp"

namespace weylrep::io {

using nlohmann::json;

json coeffs_json(const Coeffs& c);

/// Cartan matrix, positive roots in index order, coroots, heights, marks,
/// Coxeter number. Deterministic; used for golden files.
json root_system_json(const RootSystem& rs);
std::string root_system_text(const RootSystem& rs);

/// Every (a, b, N(a, b)) keyed by root coefficients, so that a table can be
/// re-read even if the root ordering changes.
json constants_json(const StructureConstants& c);

/// Inverse of constants_json. Throws std::invalid_argument on a malformed
/// document, an unknown root, or a type mismatch with `rs`.
StructureConstants constants_from_json(std::shared_ptr<const RootSystem> rs, const json& doc);

/// Layout with rows the part (1,0), columns the part (0,1), each cell the sum
/// or absent, followed by the fiber sizes.
json sigma_table_json(const SigmaRSDatum& d);
std::string sigma_table_text(const SigmaRSDatum& d);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace weylrep::io
