#include "swx/commands.hpp"

#include "swx/errors.hpp"
#include "swx/manifest_io.hpp"

#include <limits>

namespace swx {

using nlohmann::json;

ModelSource open_model(const std::string& source) {
  return ModelSource{source, build_model(load_manifest(source))};
}

CohClass integral_class(const std::vector<Rational>& coords, std::size_t b2) {
  if (coords.size() != b2)
    throw ValidationError("class has " + std::to_string(coords.size()) + " coordinates, expected " +
                          std::to_string(b2));
  CohClass c;
  for (const auto& q : coords) {
    if (!is_integer(q)) throw ValidationError("coordinate " + to_string(q) + " is not an integer");
    const Integer n = to_integer(q);
    if (n > std::numeric_limits<std::int32_t>::max() || n < std::numeric_limits<std::int32_t>::min())
      throw ValidationError("coordinate " + n.str() + " is out of range");
    c.coords.push_back(n.convert_to<std::int64_t>());
  }
  return c;
}

RatClass rational_class(const std::vector<Rational>& coords, std::size_t b2) {
  if (coords.size() != b2)
    throw ValidationError("class has " + std::to_string(coords.size()) + " coordinates, expected " +
                          std::to_string(b2));
  return RatClass{coords};
}

namespace {

bool is_projective_plane(const ManifoldModel& x) {
  return x.b1 == 0 && x.form.gram() == IntMatrix{{1}};
}

// The rule "SW(c)(-) = -1 for c <= 3" is often quoted for the projective
// plane; resolution from the vanishing chamber gives 0 at c = 1 and c = 3.
struct PlaneRow {
  std::int64_t c;
  int w_c;
  Rational minus;
};

std::optional<std::string> plane_boundary_warning(const ManifoldModel& x,
                                                  const std::vector<PlaneRow>& rows) {
  if (!is_projective_plane(x)) return std::nullopt;
  std::string offenders;
  for (const auto& [c, w_c, minus] : rows) {
    if (w_c >= 0 && c <= 3 && minus != -1) {
      if (!offenders.empty()) offenders += ", ";
      offenders += "c = " + std::to_string(c) + " gives SW(-) = " + to_string(minus);
    }
  }
  if (offenders.empty()) return std::nullopt;
  return "boundary discrepancy: the quoted rule 'SW(c)(-) = -1 for c <= 3' does not hold here (" +
         offenders +
         "); wall crossing from the vanishing chamber gives SW(c)(-) = -1 exactly for c <= -3";
}

json resolved_json(const ChamberValues& v) {
  json plus = to_json(v.plus);
  plus["provenance"] = to_string(v.plus_source);
  json minus = to_json(v.minus);
  minus["provenance"] = to_string(v.minus_source);
  return json{{"plus", plus}, {"minus", minus}};
}

}  // namespace

Report cmd_info(const ModelSource& m) {
  const ManifoldModel& x = m.model;
  const TopoInvariants t = invariants(x);
  Report r;
  r.command = "info";
  r.inputs = {{"manifest", m.source}};
  json flags = nullptr;
  if (x.flags) {
    flags = json::object();
    flags["psc_vanishing_side"] =
        x.flags->psc_vanishing_side ? json(to_string(*x.flags->psc_vanishing_side)) : json(nullptr);
    flags["notes"] = x.flags->notes;
  }
  r.outputs = {
      {"name", x.name},
      {"b1", x.b1},
      {"b2", x.b2()},
      {"form", x.form.description()},
      {"determinant", to_string(determinant(x.form.gram()))},
      {"even", x.form.is_even()},
      {"signature", {{"positive", x.form.signature().positive},
                     {"negative", x.form.signature().negative}}},
      {"euler", t.euler},
      {"sigma", t.sigma},
      {"h_ref", to_json(x.h_ref)},
      {"h_ref_square", to_string(square(x.form, x.h_ref))},
      {"catalog_flags", flags},
      {"validation", {{"unimodular", true},
                      {"b_plus_is_one", true},
                      {"cup_alternating", true},
                      {"h_ref_positive", true}}},
  };
  return r;
}

Report cmd_delta(const ModelSource& m, const CohClass& c, Orientation1 o1,
                 std::optional<int> degree) {
  const ManifoldModel& x = m.model;
  const SWForm delta = wall_delta(x, c, o1);
  Report r;
  r.command = "delta";
  r.inputs = {{"manifest", m.source},
              {"c", to_json(c)},
              {"o1", o1.sign},
              {"r", degree ? json(*degree) : json(nullptr)}};
  json components = to_json(delta)["components"];
  if (degree) {
    if (*degree < 0) throw ValidationError("degree r must be non-negative");
    json filtered = json::array();
    for (const auto& comp : components)
      if (comp["degree"] == *degree) filtered.push_back(comp);
    components = filtered;
  }
  r.outputs = {{"w_c", delta.w_c()},
               {"window", wall_window(x.b1, delta.w_c())},
               {"u_c", to_json(u_c(x, c))},
               {"components", components}};
  return r;
}

Report cmd_chamber(const ModelSource& m, const CohClass& c, const RatClass& omega,
                   const RatClass& b) {
  const ManifoldModel& x = m.model;
  const Classification cl = classify(x, c, PeriodPair{omega, b});
  Report r;
  r.command = "chamber";
  r.inputs = {{"manifest", m.source}, {"c", to_json(c)}, {"omega", to_json(omega)}, {"b", to_json(b)}};
  r.outputs = {{"sheet", to_string(cl.sheet)},
               {"side", cl.side ? json(to_string(*cl.side)) : json(nullptr)},
               {"on_wall", cl.on_wall()},
               {"c_good", !cl.on_wall()},
               {"wall_pairing", to_string(cl.wall_pairing)}};
  return r;
}

Report cmd_resolve(const ModelSource& m, const CohClass& c, Orientation1 o1,
                   std::optional<Side> vanish) {
  const ManifoldModel& x = m.model;
  std::string source = "argument";
  if (!vanish) {
    vanish = catalog_vanishing_side(x, c);
    source = "catalog";
  }
  if (!vanish)
    throw NotApplicableError("no vanishing side given and model '" + x.name +
                             "' declares none; pass --vanish");
  const ChamberValues v = resolve(x, c, o1, *vanish);
  Report r;
  r.command = "resolve";
  r.inputs = {{"manifest", m.source},
              {"c", to_json(c)},
              {"o1", o1.sign},
              {"vanish", source == "argument" ? json(to_string(*vanish)) : json(nullptr)}};
  r.outputs = resolved_json(v);
  r.outputs["w_c"] = v.plus.w_c();
  r.outputs["vanishing_side"] = to_string(*vanish);
  r.outputs["vanishing_side_source"] = source;
  if (is_projective_plane(x))
    if (auto w = plane_boundary_warning(x, {{c.coords[0], v.minus.w_c(), v.minus.scalar()}}))
      r.warnings.push_back(*w);
  return r;
}

Report cmd_table(const ModelSource& m, int box, Orientation1 o1) {
  if (box < 1) throw ValidationError("--box must be >= 1");
  const ManifoldModel& x = m.model;
  Report r;
  r.command = "table";
  r.inputs = {{"manifest", m.source}, {"box", box}, {"o1", o1.sign}};
  json rows = json::array();
  std::vector<PlaneRow> minus_values;
  const bool has_flags = x.flags && x.flags->psc_vanishing_side;
  for (const auto& c : enumerate_characteristic(x.form, box)) {
    const SWForm delta = wall_delta(x, c, o1);
    json row = {{"c", to_json(c)}, {"w_c", delta.w_c()}, {"delta", to_json(delta)["components"]}};
    row["resolved"] = nullptr;
    if (has_flags) {
      try {
        const Side side = *catalog_vanishing_side(x, c);
        ChamberValues v = resolve(x, c, o1, side);
        row["resolved"] = resolved_json(v);
        row["resolved"]["vanishing_side"] = to_string(side);
        if (x.b1 == 0) minus_values.push_back({c.coords[0], delta.w_c(), v.minus.scalar()});
      } catch (const OnWallError& e) {
        row["note"] = e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  r.outputs = {{"rows", rows}};
  if (auto w = plane_boundary_warning(x, minus_values)) r.warnings.push_back(*w);
  return r;
}

}  // namespace swx
