#include "swx/catalog.hpp"

#include "swx/errors.hpp"

namespace swx {

namespace {

Manifest blown_up_plane(int n) {
  Manifest m;
  std::string form = "diag:[1";
  for (int i = 0; i < n; ++i) form += ",-1";
  form += "]";
  m.name = n == 0 ? "P2" : "P2#" + std::to_string(n) + "-P2";
  m.b1 = 0;
  m.form = form;
  m.h_ref.assign(static_cast<std::size_t>(n) + 1, 0);
  m.h_ref[0] = 1;
  m.catalog_flags = CatalogFlags{
      VanishingRule::Auto,
      n == 0 ? "Fubini-Study metric has positive scalar curvature; its period ray is h. "
               "Characteristic classes are the odd multiples of h."
             : "Rational surface with p_g = q = 0 carrying a positive scalar curvature "
               "Kaehler metric; h_ref is the pulled-back hyperplane class."};
  return m;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"p2", blown_up_plane(0), true});
  for (int n = 1; n <= 3; ++n)
    out.push_back({"p2-blowup-" + std::to_string(n), blown_up_plane(n), true});

  Manifest t2s2;
  t2s2.name = "T2xS2";
  t2s2.b1 = 2;
  t2s2.form = "U";
  t2s2.cup = {{0, 1}};
  t2s2.h_ref = {1, 1};
  t2s2.catalog_flags = CatalogFlags{
      VanishingRule::Auto,
      "Basis (T2 x pt, pt x S2) of H2; e1, e2 a symplectic basis of H1(T2). "
      "The flat x round product metric has positive scalar curvature."};
  out.push_back({"t2xs2", t2s2, false});

  // Genus-2 surface times S2: H1 = <a1,b1,a2,b2>, a_i ∪ b_i = [pt x S2]^PD.
  Manifest sigma2;
  sigma2.name = "Sigma2xS2";
  sigma2.b1 = 4;
  sigma2.form = "U";
  // Rows (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
  sigma2.cup = {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}};
  sigma2.h_ref = {1, 1};
  out.push_back({"sigma2xs2", sigma2, false});

  Manifest synthetic;
  synthetic.name = "U+<-1>";
  synthetic.b1 = 0;
  synthetic.form = "sum:[U,diag:[-1]]";
  synthetic.h_ref = {1, 1, 0};
  synthetic.catalog_flags = CatalogFlags{std::nullopt, "Synthetic odd lattice for wall tests."};
  out.push_back({"u-plus-minus1", synthetic, false});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.key;
  throw ValidationError("unknown catalog entry '" + key + "' (known: " + known + ")");
}

}  // namespace swx
