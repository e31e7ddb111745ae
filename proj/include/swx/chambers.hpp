#pragma once

// Period domain of a b+ = 1 manifold: the two sheets of the hyperboloid,
// the wall (c - b)·ω = 0 and the four chambers of type c.
//
// Period points are stored as unnormalized rays of positive square; every
// predicate here depends only on the ray.

#include "swx/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swx {

enum class Sheet { H0, MinusH0 };

inline Sheet opposite(Sheet s) { return s == Sheet::H0 ? Sheet::MinusH0 : Sheet::H0; }
inline const char* to_string(Sheet s) { return s == Sheet::H0 ? "H0" : "-H0"; }

struct PeriodPair {
  RatClass omega;  // positive square; only the ray matters
  RatClass b;      // twist class

  friend bool operator==(const PeriodPair&, const PeriodPair&) = default;
};

struct Chamber {
  Sheet sheet = Sheet::H0;
  Side side = Side::Plus;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

std::string to_string(const Chamber& ch);

/// Result of classify: a chamber, or the wall when side is empty.
struct Classification {
  Sheet sheet = Sheet::H0;
  std::optional<Side> side;
  Rational wall_pairing;  // (c - b)·ω

  bool on_wall() const { return !side.has_value(); }
  /// Throws OnWallError when on the wall.
  Chamber chamber() const;
};

/// Throws NotInPositiveCone unless ω² > 0; ValidationError on bad sizes.
void validate_period(const ManifoldModel& x, const PeriodPair& p);

Sheet sheet_of(const ManifoldModel& x, const RatClass& omega);

Classification classify(const ManifoldModel& x, const CohClass& c, const PeriodPair& p);

bool is_c_good(const ManifoldModel& x, const CohClass& c, const PeriodPair& p);

/// Number of the form base + coeff·√radicand with radicand >= 0 and not a
/// rational square unless coeff = 0.
struct QuadraticSurd {
  Rational base;
  Rational coeff;
  Rational radicand;

  bool is_rational() const { return coeff == 0; }
  /// Exact sign of (this - x).
  int compare(const Rational& x) const;
};

std::string to_string(const QuadraticSurd& s);

/// f(t) = a t² + b t + c on [0, 1].
struct Quadratic {
  Rational a, b, c;

  Rational operator()(const Rational& t) const { return (a * t + b) * t + c; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
};

/// Real roots of q (q not identically zero), ascending, listed with
/// multiplicity.
std::vector<QuadraticSurd> real_roots(const Quadratic& q);

struct CrossingReport {
  Quadratic wall_function;         // f(t) = (c - b(t))·ω(t)
  bool identically_on_wall = false;
  bool changes_sign = false;       // f takes both signs on [0, 1]
  int crossings = 0;               // roots in (0, 1) with multiplicity
  std::vector<QuadraticSurd> roots;  // the roots counted above
  Classification start;
  Classification end;
};

/// Wall bookkeeping along the straight segment (1-t)·p0 + t·p1. Throws
/// PathLeavesCone if ω(t)² <= 0 somewhere on [0, 1].
CrossingReport segment_crossing(const ManifoldModel& x, const CohClass& c,
                                const PeriodPair& p0, const PeriodPair& p1);

/// A period pair lying in the given chamber of type c: ω = ±h_ref and
/// b = c ± h_ref.
PeriodPair chamber_representative(const ManifoldModel& x, const CohClass& c, Chamber ch);

/// A period pair on the wall of c over the given sheet.
PeriodPair wall_representative(const ManifoldModel& x, const CohClass& c, Sheet sheet);

}  // namespace swx
