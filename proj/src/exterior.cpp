#include "swx/exterior.hpp"

#include "swx/errors.hpp"

#include <algorithm>
#include <bit>

namespace swx {

int blade_grade(Blade b) { return std::popcount(b); }

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; b != 0; ++i, b >>= 1)
    if (b & 1u) out.push_back(i);
  return out;
}

Blade make_blade(const std::vector<int>& indices, std::size_t rank) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank)
      throw ValidationError("blade index " + std::to_string(i + 1) + " out of range for rank " +
                            std::to_string(rank));
    const Blade bit = Blade{1} << i;
    if (b & bit) throw ValidationError("repeated blade index " + std::to_string(i + 1));
    b |= bit;
  }
  return b;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Each pair (i in a, j in b) with i > j costs one transposition.
  int swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const Blade low = rest & (~rest + 1);
    swaps += std::popcount(a & ~(low | (low - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

Blade full_blade(std::size_t rank) {
  return rank == 0 ? Blade{0} : static_cast<Blade>((std::uint64_t{1} << rank) - 1);
}

Multivector::Multivector(std::size_t rank) : rank_(rank) {
  if (rank > kMaxExteriorRank)
    throw ValidationError("exterior algebra rank " + std::to_string(rank) + " exceeds " +
                          std::to_string(kMaxExteriorRank));
}

Multivector Multivector::scalar(std::size_t rank, const Rational& value) {
  Multivector m(rank);
  m.add(0, value);
  return m;
}

Multivector Multivector::blade(std::size_t rank, const std::vector<int>& indices,
                               const Rational& coeff) {
  make_blade(indices, rank);  // range and repetition check
  Multivector acc = scalar(rank, coeff);
  for (int i : indices) {
    Multivector e(rank);
    e.add(Blade{1} << i, 1);
    acc = wedge(acc, e);
  }
  return acc;
}

Rational Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add(Blade b, const Rational& coeff) {
  if (coeff == 0) return;
  if ((b & ~full_blade(rank_)) != 0)
    throw ValidationError("blade outside rank " + std::to_string(rank_));
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::grade_part(int r) const {
  Multivector out(rank_);
  for (const auto& [b, c] : terms_)
    if (blade_grade(b) == r) out.terms_.emplace(b, c);
  return out;
}

bool Multivector::is_homogeneous(int r) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [r](const auto& t) { return blade_grade(t.first) == r; });
}

bool Multivector::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

std::vector<std::pair<Blade, Rational>> Multivector::sorted_terms() const {
  std::vector<std::pair<Blade, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int gx = blade_grade(x.first);
    const int gy = blade_grade(y.first);
    if (gx != gy) return gx < gy;
    return blade_indices(x.first) < blade_indices(y.first);
  });
  return out;
}

namespace {

void require_same_rank(const Multivector& a, const Multivector& b, const char* op) {
  if (a.rank() != b.rank())
    throw ValidationError(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) +
                          " vs " + std::to_string(b.rank()) + ")");
}

}  // namespace

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_rank(*this, other, "add");
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_rank(*this, other, "subtract");
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const Multivector& m, bool dual) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : m.sorted_terms()) {
    Rational mag = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    const auto idx = blade_indices(b);
    if (idx.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += "^";
      out += "e" + std::to_string(idx[k] + 1) + (dual ? "*" : "");
    }
  }
  return out;
}

Orientation1 Orientation1::from_sign(int s) {
  if (s != 1 && s != -1)
    throw ValidationError("orientation sign must be +1 or -1, got " + std::to_string(s));
  return Orientation1{s};
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_rank(a, b, "wedge");
  Multivector out(a.rank());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      out.add(ba | bb, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

Multivector divided_power(const Multivector& u, int k) {
  if (!u.is_homogeneous(2))
    throw ValidationError("divided_power requires a homogeneous 2-form");
  if (k < 0) throw ValidationError("divided_power requires k >= 0");
  Multivector acc = Multivector::scalar(u.rank(), 1);
  for (int j = 1; j <= k; ++j) {
    acc = wedge(acc, u);
    acc *= Rational(1, j);
    if (acc.is_zero()) break;
  }
  return acc;
}

Rational top_pairing(const Multivector& m, Orientation1 o) {
  return Rational(o.sign) * m.coefficient(full_blade(m.rank()));
}

namespace {

Rational pfaffian_rec(const RationalMatrix& a, std::vector<std::size_t>& live) {
  if (live.empty()) return 1;
  const std::size_t first = live.front();
  Rational total = 0;
  for (std::size_t pos = 1; pos < live.size(); ++pos) {
    const std::size_t j = live[pos];
    if (a[first][j] == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(live.size() - 2);
    for (std::size_t q = 1; q < live.size(); ++q)
      if (q != pos) rest.push_back(live[q]);
    const Rational minor = pfaffian_rec(a, rest);
    // Position pos (0-based) within the live set contributes (-1)^(pos-1).
    if ((pos - 1) % 2 == 0) total += a[first][j] * minor;
    else total -= a[first][j] * minor;
  }
  return total;
}

}  // namespace

Rational pfaffian(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ValidationError("pfaffian: matrix is not square");
  if (n % 2 != 0) throw ValidationError("pfaffian: odd dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (a[i][j] != -a[j][i]) throw ValidationError("pfaffian: matrix is not antisymmetric");
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  return pfaffian_rec(a, live);
}

RationalMatrix two_form_matrix(const Multivector& u) {
  if (!u.is_homogeneous(2))
    throw ValidationError("two_form_matrix requires a homogeneous 2-form");
  const std::size_t n = u.rank();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (const auto& [b, c] : u.terms()) {
    const auto idx = blade_indices(b);
    a[idx[0]][idx[1]] = c;
    a[idx[1]][idx[0]] = -c;
  }
  return a;
}

Multivector two_form_from_matrix(const RationalMatrix& a) {
  Multivector u(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      u.add(make_blade({static_cast<int>(i), static_cast<int>(j)}, a.size()), a[i][j]);
  return u;
}

Multivector complement_functional(const Multivector& d, Orientation1 o) {
  if (!d.is_zero() && !d.is_homogeneous(blade_grade(d.terms().begin()->first)))
    throw ValidationError("complement_functional requires a homogeneous element");
  const Blade full = full_blade(d.rank());
  Multivector phi(d.rank());
  for (const auto& [b, c] : d.terms()) {
    const Blade comp = full & ~b;
    const int s = wedge_sign(comp, b) * o.sign;
    phi.add(comp, s > 0 ? c : Rational(-c));
  }
  return phi;
}

Rational evaluate(const Multivector& functional, const Multivector& lambda) {
  require_same_rank(functional, lambda, "evaluate");
  Rational s = 0;
  for (const auto& [b, c] : lambda.terms()) s += c * functional.coefficient(b);
  return s;
}

}  // namespace swx
