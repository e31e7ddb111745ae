#pragma once

// JSON manifests. Schema:
//   name   string
//   b1     non-negative integer
//   form   form-spec string ("U", "diag:[1,-1]", "sum:[U,diag:[-1]]")
//   cup    C(b1,2) integer arrays of length b2, pairs (i,j) in
//          lexicographic order; present iff b1 >= 2
//   h_ref  integer array of length b2 with positive square
//   catalog_flags (optional)
//          psc_vanishing_side  "+", "-" or "auto"
//          notes               string
// Unknown keys are rejected.

#include "swx/topology.hpp"

#include <json.hpp>

#include <string>

namespace swx {

/// Throws ValidationError naming the offending key or value.
Manifest parse_manifest(const nlohmann::json& doc);
Manifest parse_manifest_text(const std::string& text);

nlohmann::json manifest_to_json(const Manifest& m);

/// Reads a manifest file, or a built-in entry when `source` has the form
/// "catalog:<key>". Throws IoError when the file cannot be read.
Manifest load_manifest(const std::string& source);

}  // namespace swx
