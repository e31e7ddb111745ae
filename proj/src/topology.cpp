#include "swx/topology.hpp"

#include "swx/errors.hpp"

#include <algorithm>
#include <array>

namespace swx {

const char* to_string(VanishingRule rule) {
  switch (rule) {
    case VanishingRule::Plus: return "+";
    case VanishingRule::Minus: return "-";
    case VanishingRule::Auto: return "auto";
  }
  return "?";
}

std::size_t cup_rows(int b1) {
  return b1 < 2 ? 0 : static_cast<std::size_t>(b1) * (b1 - 1) / 2;
}

std::size_t cup_row_index(int i, int j, int b1) {
  // Rows before i: (b1-1) + (b1-2) + ... + (b1-i).
  const std::size_t before = static_cast<std::size_t>(i) * (2 * b1 - i - 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

CohClass ManifoldModel::cup_product(int i, int j) const {
  if (i == j) return CohClass{std::vector<std::int64_t>(b2(), 0)};
  if (i < j) return cup[cup_row_index(i, j, b1)];
  return -cup[cup_row_index(j, i, b1)];
}

namespace {

std::string quad_name(const std::array<int, 4>& q) {
  return "(" + std::to_string(q[0] + 1) + "," + std::to_string(q[1] + 1) + "," +
         std::to_string(q[2] + 1) + "," + std::to_string(q[3] + 1) + ")";
}

}  // namespace

void validate_cup(const IntersectionForm& form, int b1, const std::vector<CohClass>& cup) {
  if (cup.size() != cup_rows(b1))
    throw ValidationError("cup tensor has " + std::to_string(cup.size()) + " rows, expected " +
                          std::to_string(cup_rows(b1)));
  for (std::size_t r = 0; r < cup.size(); ++r)
    if (cup[r].size() != form.rank())
      throw ValidationError("cup row " + std::to_string(r) + " has length " +
                            std::to_string(cup[r].size()) + ", expected " +
                            std::to_string(form.rank()));

  auto mu = [&](int i, int j) -> CohClass {
    if (i == j) return CohClass{std::vector<std::int64_t>(form.rank(), 0)};
    if (i < j) return cup[cup_row_index(i, j, b1)];
    return -cup[cup_row_index(j, i, b1)];
  };
  auto value = [&](int i, int j, int k, int l) { return pair(form, mu(i, j), mu(k, l)); };

  for (int i = 0; i < b1; ++i)
    for (int j = 0; j < b1; ++j)
      for (int k = 0; k < b1; ++k)
        for (int l = 0; l < b1; ++l) {
          if (i == j || k == l) continue;
          std::array<int, 4> q{i, j, k, l};
          const Integer v = value(i, j, k, l);
          std::array<int, 4> sorted = q;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            if (v != 0)
              throw CupValidationError("cup products fail to alternate at index quadruple " +
                                       quad_name(q) + ": pairing " + v.str() +
                                       " != 0 on repeated indices");
            continue;
          }
          // Parity of the permutation taking q to sorted order.
          int inversions = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (q[a] > q[b]) ++inversions;
          const Integer reference = value(sorted[0], sorted[1], sorted[2], sorted[3]);
          const Integer expected = inversions % 2 ? Integer(-reference) : reference;
          if (v != expected)
            throw CupValidationError("cup products fail to alternate at index quadruple " +
                                     quad_name(q) + ": pairing " + v.str() + ", expected " +
                                     expected.str());
        }
}

ManifoldModel build_model(const Manifest& manifest) {
  if (manifest.b1 < 0) throw ValidationError("b1 must be non-negative");
  if (static_cast<std::size_t>(manifest.b1) > kMaxExteriorRank)
    throw ValidationError("b1 = " + std::to_string(manifest.b1) + " exceeds the supported " +
                          std::to_string(kMaxExteriorRank));
  IntersectionForm form = make_form(manifest.form);
  const Signature sig = form.signature();
  if (sig.positive != 1)
    throw UnsupportedSignature("form '" + manifest.form + "' has b+ = " +
                               std::to_string(sig.positive) + "; only b+ = 1 is supported");

  std::vector<CohClass> cup;
  for (const auto& row : manifest.cup) cup.push_back(CohClass{row});
  validate_cup(form, manifest.b1, cup);

  CohClass h{manifest.h_ref};
  if (h.size() != form.rank())
    throw ValidationError("h_ref has length " + std::to_string(h.size()) + ", expected " +
                          std::to_string(form.rank()));
  if (square(form, h) <= 0)
    throw ValidationError("h_ref " + to_string(h) + " must have positive square, got " +
                          square(form, h).str());

  return ManifoldModel{manifest.name, manifest.b1, std::move(form), std::move(cup),
                       std::move(h), manifest.catalog_flags};
}

TopoInvariants invariants(const ManifoldModel& x) {
  return TopoInvariants{2 - 2 * x.b1 + static_cast<int>(x.b2()), x.form.signature().sigma()};
}

Multivector u_c(const ManifoldModel& x, const CohClass& c) {
  require_characteristic(x.form, c);
  Multivector u(static_cast<std::size_t>(x.b1));
  for (int i = 0; i < x.b1; ++i)
    for (int j = i + 1; j < x.b1; ++j) {
      const Integer p = pair(x.form, c, x.cup[cup_row_index(i, j, x.b1)]);
      if (p % 2 != 0)
        throw IntegralityError("Q(c, mu(e" + std::to_string(i + 1) + "^e" +
                               std::to_string(j + 1) + ")) = " + p.str() + " is odd for c = " +
                               to_string(c) + "; the manifest is inconsistent");
      u.add(make_blade({i, j}, u.rank()), Rational(Integer(p / 2)));
    }
  return u;
}

}  // namespace swx
