#pragma once

// Topological model of a closed oriented 4-manifold with b+ = 1: the
// intersection lattice, b1, and the cup product Λ²H¹ → H².

#include "swx/exterior.hpp"
#include "swx/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swx {

enum class Side { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline const char* to_string(Side s) { return s == Side::Plus ? "+" : "-"; }

/// Where Witten's vanishing theorem places a zero invariant. `Auto` derives
/// the side per class c from the chamber of (h_ref, b = 0), i.e. it assumes
/// a positive scalar curvature metric whose period ray is h_ref.
enum class VanishingRule { Plus, Minus, Auto };

const char* to_string(VanishingRule rule);

struct CatalogFlags {
  std::optional<VanishingRule> psc_vanishing_side;
  std::string notes;

  friend bool operator==(const CatalogFlags&, const CatalogFlags&) = default;
};

/// Raw manifest contents, before validation.
struct Manifest {
  std::string name;
  int b1 = 0;
  std::string form;
  std::vector<std::vector<std::int64_t>> cup;  // C(b1,2) rows, (i,j) lexicographic
  std::vector<std::int64_t> h_ref;
  std::optional<CatalogFlags> catalog_flags;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Number of pairs i < j among b1 indices.
std::size_t cup_rows(int b1);
/// Row of the pair (i, j), i < j, 0-based.
std::size_t cup_row_index(int i, int j, int b1);

struct ManifoldModel {
  std::string name;
  int b1 = 0;
  IntersectionForm form;
  std::vector<CohClass> cup;
  CohClass h_ref;
  std::optional<CatalogFlags> flags;

  std::size_t b2() const { return form.rank(); }
  /// μ(e_i ∧ e_j) for any i != j (antisymmetric extension).
  CohClass cup_product(int i, int j) const;
};

struct TopoInvariants {
  int euler = 0;
  int sigma = 0;

  friend bool operator==(const TopoInvariants&, const TopoInvariants&) = default;
};

/// Validates the manifest eagerly. Throws ValidationError,
/// UnsupportedSignature (b+ != 1) or CupValidationError.
ManifoldModel build_model(const Manifest& manifest);

/// Checks that Q(μ(e_i∧e_j), μ(e_k∧e_l)) is an alternating 4-tensor.
/// Throws CupValidationError naming the first offending quadruple.
void validate_cup(const IntersectionForm& form, int b1, const std::vector<CohClass>& cup);

TopoInvariants invariants(const ManifoldModel& x);

/// u_c = Σ_{i<j} ½ Q(c, μ(e_i∧e_j)) e_i∧e_j as a grade-2 multivector of
/// rank b1. Throws NotCharacteristic, or IntegralityError on an odd pairing.
Multivector u_c(const ManifoldModel& x, const CohClass& c);

}  // namespace swx
