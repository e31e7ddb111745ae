#include "swx/chambers.hpp"

#include "swx/errors.hpp"

namespace swx {

std::string to_string(const Chamber& ch) {
  return std::string("(") + to_string(ch.sheet) + "," + to_string(ch.side) + ")";
}

Chamber Classification::chamber() const {
  if (!side) throw OnWallError("period pair lies on the wall (c-b).omega = 0");
  return Chamber{sheet, *side};
}

void validate_period(const ManifoldModel& x, const PeriodPair& p) {
  if (p.omega.size() != x.b2() || p.b.size() != x.b2())
    throw ValidationError("period pair has wrong dimension (expected " +
                          std::to_string(x.b2()) + ")");
  const Rational sq = pair(x.form, p.omega, p.omega);
  if (sq <= 0)
    throw NotInPositiveCone("omega = " + to_string(p.omega) + " has square " + to_string(sq) +
                            " <= 0");
}

Sheet sheet_of(const ManifoldModel& x, const RatClass& omega) {
  if (omega.size() != x.b2())
    throw ValidationError("omega has wrong dimension (expected " + std::to_string(x.b2()) + ")");
  const Rational sq = pair(x.form, omega, omega);
  if (sq <= 0)
    throw NotInPositiveCone("omega = " + to_string(omega) + " has square " + to_string(sq) +
                            " <= 0");
  const Rational with_ref = pair(x.form, omega, to_rational(x.h_ref));
  // Two positive classes in a form of type (1, n) never pair to zero.
  if (with_ref == 0)
    throw InternalConsistencyError("positive class " + to_string(omega) +
                                   " is orthogonal to h_ref");
  return with_ref > 0 ? Sheet::H0 : Sheet::MinusH0;
}

Classification classify(const ManifoldModel& x, const CohClass& c, const PeriodPair& p) {
  validate_period(x, p);
  require_characteristic(x.form, c);
  Classification out;
  out.sheet = sheet_of(x, p.omega);
  out.wall_pairing = pair(x.form, to_rational(c) - p.b, p.omega);
  // side s satisfies s·(c - b)·ω < 0.
  if (out.wall_pairing > 0) out.side = Side::Minus;
  else if (out.wall_pairing < 0) out.side = Side::Plus;
  return out;
}

bool is_c_good(const ManifoldModel& x, const CohClass& c, const PeriodPair& p) {
  return !classify(x, c, p).on_wall();
}

namespace {

int sign_plus_sqrt(const Rational& p, const Rational& q, const Rational& d) {
  // Sign of p + q·√d for d > 0 irrational-square.
  const int sp = p.sign();
  const int sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  return p * p > q * q * d ? sp : sq;
}

std::optional<Rational> rational_sqrt(const Rational& d) {
  if (d < 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(d);
  const Integer den = boost::multiprecision::denominator(d);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace

int QuadraticSurd::compare(const Rational& x) const {
  if (coeff == 0 || radicand == 0) return (base - x).sign();
  return sign_plus_sqrt(base - x, coeff, radicand);
}

std::string to_string(const QuadraticSurd& s) {
  if (s.coeff == 0 || s.radicand == 0) return to_string(s.base);
  std::string out = s.base == 0 ? "" : to_string(s.base);
  const Rational mag = s.coeff < 0 ? Rational(-s.coeff) : s.coeff;
  if (s.base != 0) out += s.coeff < 0 ? " - " : " + ";
  else if (s.coeff < 0) out += "-";
  if (mag != 1) out += to_string(mag) + "*";
  return out + "sqrt(" + to_string(s.radicand) + ")";
}

std::vector<QuadraticSurd> real_roots(const Quadratic& q) {
  if (q.a == 0) {
    if (q.b == 0) return {};
    return {QuadraticSurd{-q.c / q.b, 0, 0}};
  }
  const Rational disc = q.b * q.b - 4 * q.a * q.c;
  if (disc < 0) return {};
  const Rational base = -q.b / (2 * q.a);
  if (disc == 0) return {QuadraticSurd{base, 0, 0}, QuadraticSurd{base, 0, 0}};
  const Rational scale = Rational(1) / (2 * q.a);
  const Rational abs_scale = scale < 0 ? Rational(-scale) : scale;
  if (auto root = rational_sqrt(disc)) {
    const Rational delta = abs_scale * *root;
    return {QuadraticSurd{base - delta, 0, 0}, QuadraticSurd{base + delta, 0, 0}};
  }
  return {QuadraticSurd{base, -abs_scale, disc}, QuadraticSurd{base, abs_scale, disc}};
}

namespace {

bool in_open_unit_interval(const QuadraticSurd& r) {
  return r.compare(0) > 0 && r.compare(1) < 0;
}

// Extreme values of q on [0, 1]: endpoints plus the vertex when interior.
std::pair<Rational, Rational> range_on_unit_interval(const Quadratic& q) {
  Rational lo = q(0), hi = q(0);
  auto take = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  };
  take(q(1));
  if (q.a != 0) {
    const Rational vertex = -q.b / (2 * q.a);
    if (vertex > 0 && vertex < 1) take(q(vertex));
  }
  return {lo, hi};
}

}  // namespace

CrossingReport segment_crossing(const ManifoldModel& x, const CohClass& c,
                                const PeriodPair& p0, const PeriodPair& p1) {
  validate_period(x, p0);
  validate_period(x, p1);
  require_characteristic(x.form, c);

  const RatClass d_omega = p1.omega - p0.omega;
  const RatClass d_b = p1.b - p0.b;

  // ω(t)² must stay positive on [0, 1].
  const Quadratic norm{pair(x.form, d_omega, d_omega), 2 * pair(x.form, p0.omega, d_omega),
                       pair(x.form, p0.omega, p0.omega)};
  if (norm.a > 0) {
    const Rational vertex = -norm.b / (2 * norm.a);
    if (vertex > 0 && vertex < 1 && norm(vertex) <= 0) {
      const auto roots = real_roots(norm);
      std::string interval = "[" + to_string(roots.front()) + ", " + to_string(roots.back()) + "]";
      throw PathLeavesCone("segment leaves the positive cone: omega(t)^2 <= 0 for t in " +
                           interval + " (vertex t = " + to_string(vertex) + ")");
    }
  }

  const RatClass c0 = to_rational(c) - p0.b;
  CrossingReport report;
  report.wall_function = Quadratic{-pair(x.form, d_b, d_omega),
                                   pair(x.form, c0, d_omega) - pair(x.form, d_b, p0.omega),
                                   pair(x.form, c0, p0.omega)};
  report.start = classify(x, c, p0);
  report.end = classify(x, c, p1);

  const Quadratic& f = report.wall_function;
  if (f.is_zero()) {
    report.identically_on_wall = true;
    return report;
  }
  const auto [lo, hi] = range_on_unit_interval(f);
  report.changes_sign = lo < 0 && hi > 0;
  for (const auto& r : real_roots(f))
    if (in_open_unit_interval(r)) report.roots.push_back(r);
  report.crossings = static_cast<int>(report.roots.size());
  return report;
}

PeriodPair chamber_representative(const ManifoldModel& x, const CohClass& c, Chamber ch) {
  const RatClass h = to_rational(x.h_ref);
  const int sheet_sign = ch.sheet == Sheet::H0 ? 1 : -1;
  const int side_sign = ch.side == Side::Plus ? 1 : -1;
  // With ω = σh and b = c + sσh: (c - b)·ω = -s·h² has sign -s.
  return PeriodPair{Rational(sheet_sign) * h,
                    to_rational(c) + Rational(side_sign * sheet_sign) * h};
}

PeriodPair wall_representative(const ManifoldModel& x, const CohClass& c, Sheet sheet) {
  const RatClass h = to_rational(x.h_ref);
  return PeriodPair{Rational(sheet == Sheet::H0 ? 1 : -1) * h, to_rational(c)};
}

}  // namespace swx
