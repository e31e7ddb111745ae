#include "support/oracles.hpp"
#include "swx/errors.hpp"
#include "swx/lattice.hpp"

#include <doctest.h>

using namespace swx;

namespace {

RatClass rc(std::initializer_list<int> v) {
  RatClass out;
  for (int x : v) out.coords.push_back(Rational(x));
  return out;
}

CohClass cc(std::initializer_list<std::int64_t> v) { return CohClass{std::vector<std::int64_t>(v)}; }

}  // namespace

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(Rational(6) / 4) == "3/2");
  CHECK(to_string(Rational(-6) / 3) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-4/6") == Rational(-2) / 3);
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK(parse_rational_list("1,-2,3/4") == std::vector<Rational>{1, -2, Rational(3) / 4});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ValidationError);
}

TEST_CASE("make_form examples") {
  const auto p2 = make_form("diag:[1]");
  CHECK(p2.rank() == 1);
  CHECK(p2.signature() == Signature{1, 0});

  const auto u = make_form("U");
  CHECK(u.rank() == 2);
  CHECK(u.signature() == Signature{1, 1});
  CHECK(u.is_even());
  CHECK(u.gram() == IntMatrix{{0, 1}, {1, 0}});

  const auto s = direct_sum({diagonal_form({1}), diagonal_form({-1, -1})});
  CHECK(s.rank() == 3);
  CHECK(s.signature() == Signature{1, 2});
  CHECK(oracle::diagonal_signature(s.gram()) == Signature{1, 2});

  const auto nested = make_form("sum:[U,diag:[-1]]");
  CHECK(nested.rank() == 3);
  CHECK(nested.gram() == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  CHECK(nested.description() == "sum:[U,diag:[-1]]");
  CHECK_FALSE(nested.is_even());
}

TEST_CASE("make_form rejects malformed or degenerate specs") {
  CHECK_THROWS_AS(make_form("u"), ValidationError);
  CHECK_THROWS_AS(make_form("diag:[1, -1]"), ValidationError);
  CHECK_THROWS_AS(make_form("diag:[2]"), ValidationError);
  CHECK_THROWS_AS(make_form("diag:[0,1]"), ValidationError);
  CHECK_THROWS_AS(make_form("sum:[U,diag:[1]"), ValidationError);
  CHECK_THROWS_AS(make_form("E8"), ValidationError);
  CHECK_THROWS_AS(IntersectionForm::from_gram({{0, 1}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(IntersectionForm::from_gram({{2, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(IntersectionForm::from_gram({}), ValidationError);
}

TEST_CASE("pair examples") {
  const auto p2 = make_form("diag:[1]");
  CHECK(pair(p2, rc({3}), rc({1})) == 3);
  const auto u = make_form("U");
  CHECK(pair(u, rc({1, 0}), rc({0, 1})) == 1);
  // (2p,2q)^2 = 2 (2p)(2q) = 8pq.
  CHECK(pair(u, rc({2, 2}), rc({2, 2})) == 8);
  CHECK(pair(u, cc({2, 2}), cc({2, 2})) == 8);
  CHECK(square(u, cc({2, 4})) == 16);
  CHECK_THROWS_AS(pair(u, rc({1}), rc({0, 1})), ValidationError);
}

TEST_CASE("pair is bilinear and symmetric") {
  oracle::Gen g(1101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const auto q = IntersectionForm::from_gram(g.unimodular(n));
    auto rnd = [&] {
      RatClass v;
      for (std::size_t i = 0; i < n; ++i) v.coords.push_back(g.rational());
      return v;
    };
    const RatClass x = rnd(), y = rnd(), z = rnd();
    const Rational s = g.rational();
    CHECK(pair(q, x, y) == pair(q, y, x));
    CHECK(pair(q, x + y, z) == pair(q, x, z) + pair(q, y, z));
    CHECK(pair(q, s * x, z) == s * pair(q, x, z));
  }
}

TEST_CASE("signature agrees with rational diagonalization up to rank 6") {
  oracle::Gen g(2202);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const IntMatrix m = g.unimodular(n, 6);
    const Signature expected = oracle::diagonal_signature(m);
    CHECK(expected.positive + expected.negative == static_cast<int>(n));
    CHECK(exact_signature(m) == expected);
    CHECK(determinant(m) == oracle::gauss_determinant(oracle::to_rational(m)));
  }
  // Non-unimodular symmetric matrices exercise the same routine.
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = g.integer(-3, 3);
    if (oracle::gauss_determinant(oracle::to_rational(m)) == 0) continue;
    CHECK(exact_signature(m) == oracle::diagonal_signature(m));
  }
}

TEST_CASE("is_characteristic examples") {
  const auto p2 = make_form("diag:[1]");
  CHECK(is_characteristic(p2, cc({3})));
  CHECK_FALSE(is_characteristic(p2, cc({2})));
  CHECK(is_characteristic(make_form("U"), cc({2, 4})));
  CHECK_FALSE(is_characteristic(make_form("U"), cc({1, 0})));
  CHECK(is_characteristic(make_form("diag:[1,-1,-1]"), cc({1, 1, 1})));
  CHECK_FALSE(is_characteristic(make_form("diag:[1,-1,-1]"), cc({1, 2, 1})));
}

TEST_CASE("require_characteristic names the violated index") {
  const auto q = make_form("diag:[1,-1,-1]");
  try {
    require_characteristic(q, cc({1, 2, 1}));
    FAIL("expected NotCharacteristic");
  } catch (const NotCharacteristic& e) {
    CHECK(e.violated_index() == 1);
    CHECK(std::string(e.what()).find("e2") != std::string::npos);
  }
  CHECK_THROWS_AS(require_characteristic(q, cc({1, 1})), ValidationError);
}

TEST_CASE("characteristic test agrees with brute force over {0,1}^n") {
  oracle::Gen g(3303);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const auto q = IntersectionForm::from_gram(g.unimodular(n));
    CohClass c;
    for (std::size_t i = 0; i < n; ++i) c.coords.push_back(g.integer(-4, 4));
    CHECK(is_characteristic(q, c) == oracle::brute_characteristic(q.gram(), c.coords));
  }
}

TEST_CASE("enumerate_characteristic examples") {
  CHECK(enumerate_characteristic(make_form("diag:[1]"), 3) ==
        std::vector<CohClass>{cc({-3}), cc({-1}), cc({1}), cc({3})});
  CHECK(enumerate_characteristic(make_form("U"), 1) == std::vector<CohClass>{cc({0, 0})});
  CHECK(enumerate_characteristic(make_form("diag:[1,-1]"), 1) ==
        std::vector<CohClass>{cc({-1, -1}), cc({-1, 1}), cc({1, -1}), cc({1, 1})});
  CHECK_THROWS_AS(enumerate_characteristic(make_form("U"), 0), ValidationError);
}

TEST_CASE("enumeration is complete, sorted and closed under negation") {
  oracle::Gen g(4404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const auto q = IntersectionForm::from_gram(g.unimodular(n));
    const int box = g.integer(1, 3);
    const auto list = enumerate_characteristic(q, box);
    CHECK(std::is_sorted(list.begin(), list.end()));

    // Every box point, filtered by the brute-force test.
    std::vector<CohClass> expected;
    std::vector<std::int64_t> x(n, -box);
    while (true) {
      if (oracle::brute_characteristic(q.gram(), x)) expected.push_back(CohClass{x});
      std::size_t i = n;
      while (i > 0 && x[i - 1] == box) x[--i] = -box;
      if (i == 0) break;
      ++x[i - 1];
    }
    CHECK(list == expected);
    for (const auto& c : list) {
      CHECK(std::binary_search(list.begin(), list.end(), -c));
      CHECK(van_der_blij_check(q, c));
    }
  }
}

TEST_CASE("van der Blij examples") {
  CHECK(van_der_blij_check(make_form("diag:[1]"), cc({3})));
  CHECK(van_der_blij_check(make_form("U"), cc({2, 2})));
  CHECK(van_der_blij_check(make_form("diag:[1,-1,-1]"), cc({1, 1, 1})));
  // Not characteristic: 4 is not 1 mod 8.
  CHECK_FALSE(van_der_blij_check(make_form("diag:[1]"), cc({2})));
}
