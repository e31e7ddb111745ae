#pragma once

// Command results and their two renderings: a canonical machine format
// (compact JSON, sorted keys, rationals as "p" or "p/q" strings) and a
// presentation-only text layout.

#include "swx/chambers.hpp"
#include "swx/swinv.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace swx {

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_machine(const Report& r);
/// Inverse of to_machine. Throws ValidationError on malformed input.
Report parse_machine(const std::string& text);

std::string to_text(const Report& r);

nlohmann::json to_json(const Multivector& m);
nlohmann::json to_json(const SWForm& f);
nlohmann::json to_json(const CohClass& c);
nlohmann::json to_json(const RatClass& c);

}  // namespace swx
