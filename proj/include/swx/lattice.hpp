#pragma once

// Unimodular intersection lattices H^2(X;Z)/Tors, integral and rational
// classes, and characteristic elements.

#include "swx/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swx {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Integral class in the manifest basis.
struct CohClass {
  std::vector<std::int64_t> coords;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const CohClass&, const CohClass&) = default;
  friend auto operator<=>(const CohClass&, const CohClass&) = default;
};

/// Rational (de Rham) class in the manifest basis.
struct RatClass {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const RatClass&, const RatClass&) = default;
};

RatClass to_rational(const CohClass& c);
RatClass operator+(const RatClass& a, const RatClass& b);
RatClass operator-(const RatClass& a, const RatClass& b);
RatClass operator*(const Rational& s, const RatClass& a);
CohClass operator-(const CohClass& c);

std::string to_string(const CohClass& c);
std::string to_string(const RatClass& c);

struct Signature {
  int positive = 0;
  int negative = 0;

  int sigma() const { return positive - negative; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A symmetric unimodular integer bilinear form. Instances are immutable
/// and always validated.
class IntersectionForm {
 public:
  /// Validates symmetry and det = ±1, then computes the signature exactly.
  /// Throws ValidationError.
  static IntersectionForm from_gram(IntMatrix gram, std::string description = {});

  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  Signature signature() const { return signature_; }
  bool is_even() const;

  /// Form-spec string this form was built from ("diag:[1,-1]", "U", ...);
  /// empty for forms built from a raw Gram matrix.
  const std::string& description() const { return description_; }

  friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntersectionForm(IntMatrix gram, Signature sig, std::string description)
      : gram_(std::move(gram)), signature_(sig), description_(std::move(description)) {}

  IntMatrix gram_;
  Signature signature_;
  std::string description_;
};

IntersectionForm diagonal_form(const std::vector<int>& entries);
IntersectionForm hyperbolic_plane();
IntersectionForm direct_sum(const std::vector<IntersectionForm>& parts);

/// Parses the form-spec grammar:
///   spec  := "U" | "diag:[" int ("," int)* "]" | "sum:[" spec ("," spec)* "]"
/// Case-sensitive; whitespace is not permitted.
IntersectionForm make_form(std::string_view spec);

/// Exact signature from the characteristic polynomial (Faddeev-LeVerrier)
/// and Descartes' rule of signs, which is exact for real-rooted polynomials.
Signature exact_signature(const IntMatrix& gram);

Integer determinant(const IntMatrix& m);

Rational pair(const IntersectionForm& q, const RatClass& x, const RatClass& y);
Integer pair(const IntersectionForm& q, const CohClass& x, const CohClass& y);
Integer square(const IntersectionForm& q, const CohClass& x);

/// First basis index i with c·e_i ≢ e_i·e_i (mod 2), if any.
std::optional<std::size_t> characteristic_violation(const IntersectionForm& q,
                                                    const CohClass& c);
bool is_characteristic(const IntersectionForm& q, const CohClass& c);

/// Throws NotCharacteristic naming the violated congruence, or
/// ValidationError on a dimension mismatch.
void require_characteristic(const IntersectionForm& q, const CohClass& c);

/// All characteristic classes with every |coordinate| <= box, in
/// lexicographic order.
std::vector<CohClass> enumerate_characteristic(const IntersectionForm& q, int box);

/// c·c ≡ σ (mod 8). Always true for characteristic c on a unimodular form;
/// a false return flags corrupted input.
bool van_der_blij_check(const IntersectionForm& q, const CohClass& c);

}  // namespace swx
