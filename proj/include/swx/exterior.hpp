#pragma once

// Exact exterior algebra over a free Z-module of small rank with
// rational coefficients.

#include "swx/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace swx {

/// Basis blade e_{i1}∧...∧e_{ik} (i1 < ... < ik) encoded as a bit set.
using Blade = std::uint32_t;

inline constexpr std::size_t kMaxExteriorRank = 31;

int blade_grade(Blade b);
/// 0-based indices of the blade, increasing.
std::vector<int> blade_indices(Blade b);
/// Throws ValidationError on repeated or out-of-range indices.
Blade make_blade(const std::vector<int>& indices, std::size_t rank);
/// Sign of e_A ∧ e_B when A and B are disjoint, 0 otherwise.
int wedge_sign(Blade a, Blade b);
Blade full_blade(std::size_t rank);

/// Element of Λ*(Z^rank) ⊗ Q. Zero coefficients are never stored, so
/// equality is coefficient-wise.
class Multivector {
 public:
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(std::size_t rank = 0);

  static Multivector scalar(std::size_t rank, const Rational& value);
  /// Basis blade from 0-based indices in any order; the sign of the sorting
  /// permutation is applied.
  static Multivector blade(std::size_t rank, const std::vector<int>& indices,
                           const Rational& coeff = 1);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Blade b) const;
  void add(Blade b, const Rational& coeff);

  /// Degree-r part.
  Multivector grade_part(int r) const;
  /// True if every stored term has grade r (the zero element qualifies).
  bool is_homogeneous(int r) const;
  bool has_integer_coefficients() const;

  /// Terms ordered by grade, then lexicographically by index set.
  std::vector<std::pair<Blade, Rational>> sorted_terms() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Human readable rendering, e.g. "2*e1^e2 - e3"; dual basis elements are
/// written e1*, e2*, ...
std::string to_string(const Multivector& m, bool dual = false);

struct Orientation1 {
  int sign = 1;

  /// Throws ValidationError unless s is +1 or -1.
  static Orientation1 from_sign(int s);
  Orientation1 flipped() const { return Orientation1{-sign}; }
  friend bool operator==(const Orientation1&, const Orientation1&) = default;
};

Multivector wedge(const Multivector& a, const Multivector& b);

/// u^k / k! for a homogeneous grade-2 element u.
Multivector divided_power(const Multivector& u, int k);

/// o.sign times the coefficient of e_1∧...∧e_rank.
Rational top_pairing(const Multivector& m, Orientation1 o);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Pfaffian by recursive expansion along the first row. Throws
/// ValidationError for odd size or a matrix that is not antisymmetric.
Rational pfaffian(const RationalMatrix& a);

/// Antisymmetric coefficient matrix A with u = Σ_{i<j} A_ij e_i∧e_j.
RationalMatrix two_form_matrix(const Multivector& u);
/// Inverse of two_form_matrix; the strictly lower triangle is ignored.
Multivector two_form_from_matrix(const RationalMatrix& a);

/// Dual multivector φ with Σ_I φ_I λ_I = top_pairing(λ ∧ d, o) for every λ
/// of grade rank - grade(d). Requires d homogeneous.
Multivector complement_functional(const Multivector& d, Orientation1 o);

/// Natural pairing Σ_I φ_I λ_I of a dual multivector with a multivector.
Rational evaluate(const Multivector& functional, const Multivector& lambda);

}  // namespace swx
