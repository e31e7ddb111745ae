#include "swx/swinv.hpp"

#include "swx/errors.hpp"

#include <algorithm>

namespace swx {

int index(const ManifoldModel& x, const CohClass& c) {
  require_characteristic(x.form, c);
  const TopoInvariants t = invariants(x);
  const Integer numerator = square(x.form, c) - 2 * t.euler - 3 * t.sigma;
  if (numerator % 4 != 0)
    throw InternalConsistencyError("index numerator " + numerator.str() + " for c = " +
                                   to_string(c) + " is not divisible by 4");
  return (numerator / 4).convert_to<int>();
}

SWForm::SWForm(int b1, int w_c) : b1_(b1), w_c_(w_c) {}

Multivector SWForm::component(int r) const {
  auto it = values_.find(r);
  return it == values_.end() ? Multivector(static_cast<std::size_t>(b1_)) : it->second;
}

void SWForm::set_component(int r, Multivector v) {
  if (r < 0 || r > b1_)
    throw ValidationError("SW form degree " + std::to_string(r) + " outside [0, b1]");
  if (v.rank() != static_cast<std::size_t>(b1_))
    throw ValidationError("SW form component has rank " + std::to_string(v.rank()) +
                          ", expected " + std::to_string(b1_));
  if (!v.is_homogeneous(r))
    throw ValidationError("SW form component is not homogeneous of degree " + std::to_string(r));
  if (v.is_zero()) values_.erase(r);
  else values_.insert_or_assign(r, std::move(v));
}

Rational SWForm::evaluate(const Multivector& lambda) const {
  Rational total = 0;
  for (const auto& [r, phi] : values_) {
    if ((r - w_c_) % 2 != 0) continue;
    total += swx::evaluate(phi, lambda.grade_part(r));
  }
  return total;
}

SWForm operator-(const SWForm& f) {
  SWForm out(f.b1_, f.w_c_);
  for (const auto& [r, v] : f.values_) out.values_.emplace(r, -v);
  return out;
}

SWForm operator-(const SWForm& f, const SWForm& g) {
  if (f.b1_ != g.b1_ || f.w_c_ != g.w_c_)
    throw ValidationError("SW forms belong to different (b1, w_c)");
  SWForm out = f;
  for (const auto& [r, v] : g.values_) out.set_component(r, out.component(r) - v);
  return out;
}

std::string to_string(const SWForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [r, v] : f.components()) {
    if (!out.empty()) out += "; ";
    out += "deg " + std::to_string(r) + ": " + to_string(v, true);
  }
  return out;
}

std::vector<int> wall_window(int b1, int w_c) {
  std::vector<int> out;
  for (int r = 0; r <= std::min(b1, w_c); ++r)
    if ((r - w_c) % 2 == 0 && (b1 - r) % 2 == 0) out.push_back(r);
  return out;
}

SWForm wall_delta(const ManifoldModel& x, const CohClass& c, Orientation1 o1) {
  const int w = index(x, c);
  SWForm delta(x.b1, w);
  const std::vector<int> window = wall_window(x.b1, w);
  if (window.empty()) return delta;
  const Multivector u = u_c(x, c);
  for (int r : window) {
    const int k = (x.b1 - r) / 2;
    Multivector phi = complement_functional(divided_power(u, k), o1);
    if (k % 2 != 0) phi = -phi;
    delta.set_component(r, std::move(phi));
  }
  return delta;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Vanishing: return "vanishing";
    case Provenance::WallCrossed: return "wall-crossed";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "?";
}

ChamberValues flip_orientation1(const ChamberValues& v) {
  return ChamberValues{-v.plus, -v.minus, v.plus_source, v.minus_source};
}

ChamberValues flip_sheet(const ChamberValues& v) {
  return ChamberValues{-v.minus, -v.plus, v.minus_source, v.plus_source};
}

ChamberValues resolve(const ManifoldModel& x, const CohClass& c, Orientation1 o1,
                      Side vanishing_side) {
  const SWForm delta = wall_delta(x, c, o1);
  const SWForm zero(delta.b1(), delta.w_c());
  if (vanishing_side == Side::Minus)
    return ChamberValues{delta, zero, Provenance::WallCrossed, Provenance::Vanishing};
  return ChamberValues{zero, -delta, Provenance::Vanishing, Provenance::WallCrossed};
}

Side psc_vanishing_side(const ManifoldModel& x, const CohClass& c) {
  const RatClass h = to_rational(x.h_ref);
  const PeriodPair psc{h, RatClass{std::vector<Rational>(x.b2(), Rational(0))}};
  const Classification cl = classify(x, c, psc);
  if (cl.on_wall())
    throw OnWallError("the reference period (h_ref, b = 0) lies on the wall of c = " +
                      to_string(c) + "; no vanishing chamber can be assigned");
  return *cl.side;
}

std::optional<Side> catalog_vanishing_side(const ManifoldModel& x, const CohClass& c) {
  if (!x.flags || !x.flags->psc_vanishing_side) return std::nullopt;
  switch (*x.flags->psc_vanishing_side) {
    case VanishingRule::Plus: return Side::Plus;
    case VanishingRule::Minus: return Side::Minus;
    case VanishingRule::Auto: return psc_vanishing_side(x, c);
  }
  return std::nullopt;
}

PscCheckReport psc_catalog_check(const ManifoldModel& x, const CohClass& c, Orientation1 o1) {
  if (x.b1 != 0)
    throw NotApplicableError("the {0,1}/{0,-1} dichotomy check needs b1 = 0, model '" + x.name +
                             "' has b1 = " + std::to_string(x.b1));
  if (!x.flags || !x.flags->psc_vanishing_side)
    throw NotApplicableError("model '" + x.name + "' declares no vanishing chamber");
  PscCheckReport report;
  report.c = c;
  report.w_c = index(x, c);
  report.vanishing_side = *catalog_vanishing_side(x, c);
  report.values = resolve(x, c, o1, report.vanishing_side);
  report.value_set = {report.values.plus.scalar(), report.values.minus.scalar()};
  if (report.w_c >= 0) {
    report.holds = report.value_set == std::set<Rational>{0, 1} ||
                   report.value_set == std::set<Rational>{0, -1};
  } else {
    report.holds = report.value_set == std::set<Rational>{0};
  }
  return report;
}

}  // namespace swx
