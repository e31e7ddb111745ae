#include "swx/report.hpp"

#include "swx/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace swx {

using nlohmann::json;

json to_json(const Multivector& m) {
  json terms = json::array();
  for (const auto& [b, c] : m.sorted_terms()) {
    json idx = json::array();
    for (int i : blade_indices(b)) idx.push_back(i + 1);
    terms.push_back({{"blade", idx}, {"coeff", to_string(c)}});
  }
  return terms;
}

json to_json(const SWForm& f) {
  json comps = json::array();
  for (const auto& [r, v] : f.components())
    comps.push_back({{"degree", r}, {"terms", to_json(v)}});
  return json{{"components", comps}};
}

json to_json(const CohClass& c) { return c.coords; }

json to_json(const RatClass& c) {
  json out = json::array();
  for (const auto& q : c.coords) out.push_back(to_string(q));
  return out;
}

std::string to_machine(const Report& r) {
  const json doc = {{"command", r.command},
                    {"inputs", r.inputs},
                    {"outputs", r.outputs},
                    {"warnings", r.warnings}};
  return doc.dump();
}

Report parse_machine(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("command") || !doc.contains("inputs") ||
      !doc.contains("outputs") || !doc.contains("warnings"))
    throw ValidationError("malformed report: missing top-level field");
  Report r;
  r.command = doc["command"].get<std::string>();
  r.inputs = doc["inputs"];
  r.outputs = doc["outputs"];
  r.warnings = doc["warnings"].get<std::vector<std::string>>();
  return r;
}

namespace {

std::string terms_text(const json& terms, bool dual) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string coeff = t["coeff"].get<std::string>();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (t["blade"].empty()) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    bool first_index = true;
    for (const auto& i : t["blade"]) {
      if (!first_index) out += "^";
      first_index = false;
      out += "e" + std::to_string(i.get<int>()) + (dual ? "*" : "");
    }
  }
  return out;
}

std::string components_text(const json& comps) {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& c : comps) {
    if (!out.empty()) out += "; ";
    out += "deg " + std::to_string(c["degree"].get<int>()) + ": " + terms_text(c["terms"], true);
  }
  return out;
}

std::string class_text(const json& coords) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : coords) {
    if (!first) out += ",";
    first = false;
    out += v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
  }
  return out + ")";
}

void line(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(14) << key << value << "\n";
}

std::string side_text(const json& v) { return v.is_null() ? "-" : v.get<std::string>(); }

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  const json& in = r.inputs;
  const json& out = r.outputs;
  if (r.command == "info") {
    line(os, "manifold", out["name"].get<std::string>());
    line(os, "source", in["manifest"].get<std::string>());
    line(os, "b1", std::to_string(out["b1"].get<int>()));
    line(os, "b2", std::to_string(out["b2"].get<int>()));
    line(os, "form", out["form"].get<std::string>() + (out["even"].get<bool>() ? " (even)" : " (odd)"));
    line(os, "signature", "(" + std::to_string(out["signature"]["positive"].get<int>()) + "," +
                              std::to_string(out["signature"]["negative"].get<int>()) + ")");
    line(os, "euler", std::to_string(out["euler"].get<int>()));
    line(os, "sigma", std::to_string(out["sigma"].get<int>()));
    line(os, "h_ref", class_text(out["h_ref"]) + "  square " + out["h_ref_square"].get<std::string>());
    if (!out["catalog_flags"].is_null()) {
      const json& f = out["catalog_flags"];
      line(os, "psc vanishing", f["psc_vanishing_side"].is_null() ? "none"
                                                                  : f["psc_vanishing_side"].get<std::string>());
      if (!f["notes"].get<std::string>().empty()) line(os, "notes", f["notes"].get<std::string>());
    }
    line(os, "validation", "ok");
  } else if (r.command == "delta") {
    line(os, "c", class_text(in["c"]));
    line(os, "o1", in["o1"].get<int>() > 0 ? "+1" : "-1");
    line(os, "w_c", std::to_string(out["w_c"].get<int>()));
    line(os, "u_c", terms_text(out["u_c"], false));
    std::string window;
    for (const auto& d : out["window"]) window += (window.empty() ? "" : ",") + std::to_string(d.get<int>());
    line(os, "window", window.empty() ? "(empty)" : "{" + window + "}");
    if (out["components"].empty()) line(os, "delta", "0");
    for (const auto& c : out["components"])
      line(os, "degree " + std::to_string(c["degree"].get<int>()), terms_text(c["terms"], true));
  } else if (r.command == "chamber") {
    line(os, "c", class_text(in["c"]));
    line(os, "omega", class_text(in["omega"]));
    line(os, "b", class_text(in["b"]));
    line(os, "(c-b).omega", out["wall_pairing"].get<std::string>());
    if (out["on_wall"].get<bool>())
      line(os, "chamber", "on wall (" + out["sheet"].get<std::string>() + ")");
    else
      line(os, "chamber", "(" + out["sheet"].get<std::string>() + ", " + out["side"].get<std::string>() + ")");
    line(os, "c-good", out["c_good"].get<bool>() ? "yes" : "no");
  } else if (r.command == "resolve") {
    line(os, "c", class_text(in["c"]));
    line(os, "w_c", std::to_string(out["w_c"].get<int>()));
    line(os, "vanishing", out["vanishing_side"].get<std::string>() + " (" +
                              out["vanishing_side_source"].get<std::string>() + ")");
    line(os, "SW(+)", components_text(out["plus"]["components"]) + "  [" +
                          out["plus"]["provenance"].get<std::string>() + "]");
    line(os, "SW(-)", components_text(out["minus"]["components"]) + "  [" +
                          out["minus"]["provenance"].get<std::string>() + "]");
  } else if (r.command == "table") {
    std::vector<std::vector<std::string>> cells{{"c", "w_c", "delta", "vanish", "SW(+)", "SW(-)"}};
    for (const auto& row : out["rows"]) {
      std::vector<std::string> cols{class_text(row["c"]), std::to_string(row["w_c"].get<int>()),
                                    components_text(row["delta"])};
      if (row["resolved"].is_null()) {
        cols.push_back(row.contains("note") ? "wall" : "");
      } else {
        const json& v = row["resolved"];
        cols.push_back(side_text(v["vanishing_side"]));
        cols.push_back(components_text(v["plus"]["components"]));
        cols.push_back(components_text(v["minus"]["components"]));
      }
      cells.push_back(std::move(cols));
    }
    std::vector<std::size_t> width(6, 0);
    for (const auto& row : cells)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : cells) {
      std::string text;
      for (std::size_t k = 0; k < row.size(); ++k) {
        text += row[k];
        if (k + 1 < row.size()) text += std::string(width[k] - row[k].size() + 2, ' ');
      }
      os << text << "\n";
    }
  } else {
    os << to_machine(r) << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace swx
