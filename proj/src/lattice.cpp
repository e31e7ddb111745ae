#include "swx/lattice.hpp"

#include "swx/errors.hpp"

#include <charconv>

namespace swx {

RatClass to_rational(const CohClass& c) {
  RatClass out;
  out.coords.reserve(c.size());
  for (auto v : c.coords) out.coords.emplace_back(v);
  return out;
}

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

RatClass operator+(const RatClass& a, const RatClass& b) {
  require_same_size(a.size(), b.size(), "class sum");
  RatClass out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

RatClass operator-(const RatClass& a, const RatClass& b) {
  require_same_size(a.size(), b.size(), "class difference");
  RatClass out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

RatClass operator*(const Rational& s, const RatClass& a) {
  RatClass out = a;
  for (auto& x : out.coords) x *= s;
  return out;
}

CohClass operator-(const CohClass& c) {
  CohClass out = c;
  for (auto& x : out.coords) x = -x;
  return out;
}

std::string to_string(const CohClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.coords[i]);
  }
  return s + ")";
}

std::string to_string(const RatClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += to_string(c.coords[i]);
  }
  return s + ")";
}

Integer determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  int flips = 0;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      ++flips;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return flips % 2 ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

namespace {

int descartes_sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature exact_signature(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  using RMat = std::vector<std::vector<Rational>>;
  RMat a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];

  // Faddeev-LeVerrier: coeff[i] is the coefficient of x^i in det(xI - A).
  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  RMat m(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RMat next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeff[n - k + 1];
    }
    m = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    coeff[n - k] = -trace / Rational(static_cast<long long>(k));
  }

  std::vector<Rational> reflected = coeff;
  for (std::size_t i = 1; i <= n; i += 2) reflected[i] = -reflected[i];

  std::size_t zero_roots = 0;
  while (zero_roots < n && coeff[zero_roots] == 0) ++zero_roots;
  Signature sig;
  sig.positive = descartes_sign_changes(coeff);
  sig.negative = descartes_sign_changes(reflected);
  if (static_cast<std::size_t>(sig.positive + sig.negative) + zero_roots != n)
    throw InternalConsistencyError("characteristic polynomial is not real-rooted");
  return sig;
}

IntersectionForm IntersectionForm::from_gram(IntMatrix gram, std::string description) {
  const std::size_t n = gram.size();
  if (n == 0) throw ValidationError("intersection form must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n)
      throw ValidationError("Gram matrix is not square (row " + std::to_string(i) + ")");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw ValidationError("Gram matrix is not symmetric at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
  const Integer det = determinant(gram);
  if (det != 1 && det != -1)
    throw ValidationError("form is not unimodular (det = " + det.str() + ")");
  const Signature sig = exact_signature(gram);
  return IntersectionForm(std::move(gram), sig, std::move(description));
}

bool IntersectionForm::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

IntersectionForm diagonal_form(const std::vector<int>& entries) {
  IntMatrix g(entries.size(), std::vector<std::int64_t>(entries.size(), 0));
  std::string desc = "diag:[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g[i][i] = entries[i];
    if (i) desc += ",";
    desc += std::to_string(entries[i]);
  }
  return IntersectionForm::from_gram(std::move(g), desc + "]");
}

IntersectionForm hyperbolic_plane() {
  return IntersectionForm::from_gram({{0, 1}, {1, 0}}, "U");
}

IntersectionForm direct_sum(const std::vector<IntersectionForm>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, std::vector<std::int64_t>(n, 0));
  std::string desc = "sum:[";
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g[offset + i][offset + j] = p.entry(i, j);
    offset += p.rank();
    if (k) desc += ",";
    desc += p.description();
  }
  return IntersectionForm::from_gram(std::move(g), desc + "]");
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view body, std::string_view whole) {
  std::vector<std::string_view> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[') ++depth;
    else if (body[i] == ']') {
      if (--depth < 0) throw ValidationError("unbalanced brackets in form spec '" + std::string(whole) + "'");
    } else if (body[i] == ',' && depth == 0) {
      items.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ValidationError("unbalanced brackets in form spec '" + std::string(whole) + "'");
  items.push_back(body.substr(start));
  return items;
}

bool strip(std::string_view& s, std::string_view prefix, std::string_view suffix) {
  if (s.size() < prefix.size() + suffix.size()) return false;
  if (s.substr(0, prefix.size()) != prefix) return false;
  if (s.substr(s.size() - suffix.size()) != suffix) return false;
  s = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
  return true;
}

IntersectionForm parse_spec(std::string_view spec, std::string_view whole) {
  if (spec == "U") return hyperbolic_plane();
  std::string_view body = spec;
  if (strip(body, "diag:[", "]")) {
    std::vector<int> entries;
    for (auto item : split_top_level(body, whole)) {
      int value = 0;
      const auto* first = item.data();
      const auto* last = item.data() + item.size();
      if (!item.empty() && item.front() == '+') ++first;
      const auto res = std::from_chars(first, last, value);
      if (item.empty() || res.ec != std::errc() || res.ptr != last)
        throw ValidationError("bad diagonal entry '" + std::string(item) + "' in form spec '" +
                              std::string(whole) + "'");
      entries.push_back(value);
    }
    return diagonal_form(entries);
  }
  body = spec;
  if (strip(body, "sum:[", "]")) {
    std::vector<IntersectionForm> parts;
    for (auto item : split_top_level(body, whole)) parts.push_back(parse_spec(item, whole));
    return direct_sum(parts);
  }
  throw ValidationError("unrecognized form spec '" + std::string(spec) + "'");
}

}  // namespace

IntersectionForm make_form(std::string_view spec) {
  IntersectionForm form = parse_spec(spec, spec);
  // Keep the caller's spelling for reports.
  return IntersectionForm::from_gram(form.gram(), std::string(spec));
}

Rational pair(const IntersectionForm& q, const RatClass& x, const RatClass& y) {
  require_same_size(x.size(), q.rank(), "pair");
  require_same_size(y.size(), q.rank(), "pair");
  Rational s = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (x.coords[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < q.rank(); ++j)
      if (q.entry(i, j) != 0) row += Rational(q.entry(i, j)) * y.coords[j];
    s += x.coords[i] * row;
  }
  return s;
}

Integer pair(const IntersectionForm& q, const CohClass& x, const CohClass& y) {
  require_same_size(x.size(), q.rank(), "pair");
  require_same_size(y.size(), q.rank(), "pair");
  Integer s = 0;
  for (std::size_t i = 0; i < q.rank(); ++i)
    for (std::size_t j = 0; j < q.rank(); ++j)
      s += Integer(x.coords[i]) * q.entry(i, j) * y.coords[j];
  return s;
}

Integer square(const IntersectionForm& q, const CohClass& x) { return pair(q, x, x); }

std::optional<std::size_t> characteristic_violation(const IntersectionForm& q,
                                                    const CohClass& c) {
  require_same_size(c.size(), q.rank(), "is_characteristic");
  for (std::size_t i = 0; i < q.rank(); ++i) {
    std::int64_t ce = 0;
    for (std::size_t j = 0; j < q.rank(); ++j) ce += c.coords[j] * q.entry(j, i);
    if ((ce - q.entry(i, i)) % 2 != 0) return i;
  }
  return std::nullopt;
}

bool is_characteristic(const IntersectionForm& q, const CohClass& c) {
  return !characteristic_violation(q, c).has_value();
}

void require_characteristic(const IntersectionForm& q, const CohClass& c) {
  if (auto i = characteristic_violation(q, c))
    throw NotCharacteristic("class " + to_string(c) + " is not characteristic: c.e" +
                                std::to_string(*i + 1) + " != e" + std::to_string(*i + 1) +
                                ".e" + std::to_string(*i + 1) + " (mod 2)",
                            *i);
}

std::vector<CohClass> enumerate_characteristic(const IntersectionForm& q, int box) {
  if (box < 1) throw ValidationError("box must be >= 1");
  std::vector<CohClass> out;
  CohClass c{std::vector<std::int64_t>(q.rank(), -box)};
  while (true) {
    if (is_characteristic(q, c)) out.push_back(c);
    // Odometer with the last coordinate varying fastest gives lexicographic order.
    std::size_t k = q.rank();
    while (k > 0 && c.coords[k - 1] == box) {
      c.coords[k - 1] = -box;
      --k;
    }
    if (k == 0) break;
    ++c.coords[k - 1];
  }
  return out;
}

bool van_der_blij_check(const IntersectionForm& q, const CohClass& c) {
  const Integer diff = square(q, c) - q.signature().sigma();
  return diff % 8 == 0;
}

}  // namespace swx
