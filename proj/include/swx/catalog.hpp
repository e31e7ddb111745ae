#pragma once

// Built-in manifold catalog.

#include "swx/topology.hpp"

#include <string>
#include <vector>

namespace swx {

struct CatalogEntry {
  std::string key;  // used as "catalog:<key>"
  Manifest manifest;
  /// Rational surface with p_g = q = 0 (blow-ups of the projective plane).
  bool rational_surface = false;
};

const std::vector<CatalogEntry>& catalog();

/// Throws ValidationError for an unknown key.
const CatalogEntry& catalog_entry(const std::string& key);

}  // namespace swx
