#include "swx/manifest_io.hpp"

#include "swx/catalog.hpp"
#include "swx/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace swx {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key))
      throw ValidationError("unknown key '" + key + "' in " + where);
}

const json& require_key(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("manifest is missing required key '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ValidationError(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const json& v, const std::string& what) {
  if (!v.is_array()) throw ValidationError(what + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_int(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

std::string as_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw ValidationError(what + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Manifest parse_manifest(const json& doc) {
  if (!doc.is_object()) throw ValidationError("manifest must be a JSON object");
  reject_unknown_keys(doc, {"name", "b1", "form", "cup", "h_ref", "catalog_flags"}, "manifest");

  Manifest m;
  m.name = as_string(require_key(doc, "name"), "name");
  const std::int64_t b1 = as_int(require_key(doc, "b1"), "b1");
  if (b1 < 0 || b1 > 64) throw ValidationError("b1 = " + std::to_string(b1) + " out of range");
  m.b1 = static_cast<int>(b1);
  m.form = as_string(require_key(doc, "form"), "form");
  m.h_ref = as_int_array(require_key(doc, "h_ref"), "h_ref");

  if (auto it = doc.find("cup"); it != doc.end()) {
    if (m.b1 < 2) throw ValidationError("'cup' must be omitted when b1 < 2");
    if (!it->is_array()) throw ValidationError("cup must be an array of integer arrays");
    for (std::size_t r = 0; r < it->size(); ++r)
      m.cup.push_back(as_int_array((*it)[r], "cup[" + std::to_string(r) + "]"));
  } else if (m.b1 >= 2) {
    throw ValidationError("manifest with b1 = " + std::to_string(m.b1) +
                          " requires the 'cup' key");
  }

  if (auto it = doc.find("catalog_flags"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("catalog_flags must be an object");
    reject_unknown_keys(*it, {"psc_vanishing_side", "notes"}, "catalog_flags");
    CatalogFlags flags;
    if (auto side = it->find("psc_vanishing_side"); side != it->end()) {
      const std::string s = as_string(*side, "catalog_flags.psc_vanishing_side");
      if (s == "+") flags.psc_vanishing_side = VanishingRule::Plus;
      else if (s == "-") flags.psc_vanishing_side = VanishingRule::Minus;
      else if (s == "auto") flags.psc_vanishing_side = VanishingRule::Auto;
      else
        throw ValidationError("catalog_flags.psc_vanishing_side must be \"+\", \"-\" or \"auto\"");
    }
    if (auto notes = it->find("notes"); notes != it->end())
      flags.notes = as_string(*notes, "catalog_flags.notes");
    m.catalog_flags = flags;
  }
  return m;
}

Manifest parse_manifest_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("manifest is not valid JSON: ") + e.what());
  }
  return parse_manifest(doc);
}

json manifest_to_json(const Manifest& m) {
  json doc = {{"name", m.name}, {"b1", m.b1}, {"form", m.form}, {"h_ref", m.h_ref}};
  if (m.b1 >= 2) doc["cup"] = m.cup;
  if (m.catalog_flags) {
    json flags = json::object();
    if (m.catalog_flags->psc_vanishing_side)
      flags["psc_vanishing_side"] = to_string(*m.catalog_flags->psc_vanishing_side);
    if (!m.catalog_flags->notes.empty()) flags["notes"] = m.catalog_flags->notes;
    doc["catalog_flags"] = flags;
  }
  return doc;
}

Manifest load_manifest(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.starts_with(prefix)) return catalog_entry(source.substr(prefix.size())).manifest;
  std::ifstream in(source);
  if (!in) throw IoError("cannot open manifest '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading manifest '" + source + "'");
  return parse_manifest_text(buf.str());
}

}  // namespace swx
