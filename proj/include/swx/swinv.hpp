#pragma once

// Chamber-resolved Seiberg-Witten forms for b+ = 1: the index, the
// universal wall-crossing difference, orientation rules, and resolution
// from a chamber where the invariant is known to vanish.

#include "swx/chambers.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace swx {

/// w_c = (c² - 2e - 3σ) / 4. Throws NotCharacteristic, or
/// InternalConsistencyError if the quotient is not an integer.
int index(const ManifoldModel& x, const CohClass& c);

/// An element of Λ*H¹ stored degree by degree as dual multivectors: the
/// degree-r entry φ_r evaluates λ ∈ Λ^r H₁ by the natural pairing.
/// Zero components are never stored.
class SWForm {
 public:
  SWForm() = default;
  SWForm(int b1, int w_c);

  int b1() const { return b1_; }
  int w_c() const { return w_c_; }
  const std::map<int, Multivector>& components() const { return values_; }

  /// Degree-r component (zero if absent).
  Multivector component(int r) const;
  /// Throws ValidationError unless v is homogeneous of degree r and rank b1.
  void set_component(int r, Multivector v);

  bool is_zero() const { return values_.empty(); }

  /// Value on λ ∈ Λ^r H₁; zero when r ≢ w_c (mod 2).
  Rational evaluate(const Multivector& lambda) const;

  /// Degree-0 value (for b1 = 0 this is the whole invariant).
  Rational scalar() const { return component(0).coefficient(0); }

  friend SWForm operator-(const SWForm& f);
  friend SWForm operator-(const SWForm& f, const SWForm& g);
  friend bool operator==(const SWForm&, const SWForm&) = default;

 private:
  int b1_ = 0;
  int w_c_ = 0;
  std::map<int, Multivector> values_;
};

std::string to_string(const SWForm& f);

/// Degrees r where the wall-crossing difference may be non-zero:
/// 0 <= r <= min(b1, w_c), r ≡ w_c (mod 2), b1 - r even.
std::vector<int> wall_window(int b1, int w_c);

/// SW(+) - SW(-) for the class c: in each window degree r with
/// k = (b1 - r)/2 the functional λ ↦ (-1)^k ⟨λ ∧ u_c^k / k!, l_O1⟩.
SWForm wall_delta(const ManifoldModel& x, const CohClass& c, Orientation1 o1);

enum class Provenance { Vanishing, WallCrossed, UserSupplied };

const char* to_string(Provenance p);

struct ChamberValues {
  SWForm plus;
  SWForm minus;
  Provenance plus_source = Provenance::UserSupplied;
  Provenance minus_source = Provenance::UserSupplied;

  friend bool operator==(const ChamberValues&, const ChamberValues&) = default;
};

/// Reversing O1 negates both sides.
ChamberValues flip_orientation1(const ChamberValues& v);

/// Passing to -H0: SW(±) ↦ -SW(∓).
ChamberValues flip_sheet(const ChamberValues& v);

/// Sets the vanishing side to zero and recovers the other side from
/// wall_delta.
ChamberValues resolve(const ManifoldModel& x, const CohClass& c, Orientation1 o1,
                      Side vanishing_side);

/// Side of the chamber containing (h_ref, b = 0) for the class c. Throws
/// OnWallError when c·h_ref = 0.
Side psc_vanishing_side(const ManifoldModel& x, const CohClass& c);

/// Vanishing side prescribed by the model's catalog flags, if any.
std::optional<Side> catalog_vanishing_side(const ManifoldModel& x, const CohClass& c);

struct PscCheckReport {
  CohClass c;
  int w_c = 0;
  Side vanishing_side = Side::Minus;
  ChamberValues values;
  std::set<Rational> value_set;
  bool holds = false;  // {0,1} or {0,-1} if w_c >= 0, {0} otherwise
};

/// Checks the dichotomy SW({±}) = {0, 1} or {0, -1} for a b1 = 0 model
/// carrying a declared vanishing chamber. Throws NotApplicable otherwise.
PscCheckReport psc_catalog_check(const ManifoldModel& x, const CohClass& c,
                                 Orientation1 o1 = Orientation1{1});

}  // namespace swx
