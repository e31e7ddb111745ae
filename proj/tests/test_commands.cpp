#include "swx/commands.hpp"
#include "swx/errors.hpp"

#include <doctest.h>

using namespace swx;
using nlohmann::json;

namespace {

ModelSource p2() { return open_model("catalog:p2"); }
ModelSource t2s2() { return open_model("catalog:t2xs2"); }

// Degree-0 value of a components array, or 0 when absent.
std::string degree0(const json& components) {
  for (const auto& c : components)
    if (c["degree"] == 0) return c["terms"][0]["coeff"].get<std::string>();
  return "0";
}

}  // namespace

TEST_CASE("info") {
  const Report a = cmd_info(p2());
  CHECK(a.outputs["b1"] == 0);
  CHECK(a.outputs["b2"] == 1);
  CHECK(a.outputs["sigma"] == 1);
  CHECK(a.outputs["euler"] == 3);
  CHECK(a.outputs["catalog_flags"]["psc_vanishing_side"] == "auto");

  const Report b = cmd_info(t2s2());
  CHECK(b.outputs["b1"] == 2);
  CHECK(b.outputs["form"] == "U");
  CHECK(b.outputs["euler"] == 0);
  CHECK(b.outputs["sigma"] == 0);
  CHECK(b.outputs["even"] == true);
  CHECK(b.inputs["manifest"] == "catalog:t2xs2");

  CHECK(cmd_info(open_model("catalog:sigma2xs2")).outputs["catalog_flags"].is_null());
}

TEST_CASE("delta") {
  const Report a = cmd_delta(p2(), CohClass{{3}}, Orientation1{1});
  CHECK(a.outputs["w_c"] == 0);
  CHECK(degree0(a.outputs["components"]) == "1");

  const Report b = cmd_delta(p2(), CohClass{{1}}, Orientation1{1});
  CHECK(b.outputs["w_c"] == -2);
  CHECK(b.outputs["components"].empty());
  CHECK(b.outputs["window"].empty());

  const Report c = cmd_delta(t2s2(), CohClass{{2, 4}}, Orientation1{1});
  CHECK(c.outputs["w_c"] == 4);
  CHECK(c.outputs["components"] ==
        json::parse(R"([{"degree":0,"terms":[{"blade":[],"coeff":"-1"}]},
                        {"degree":2,"terms":[{"blade":[1,2],"coeff":"1"}]}])"));

  const Report d = cmd_delta(t2s2(), CohClass{{2, 4}}, Orientation1{1}, 2);
  CHECK(d.outputs["components"].size() == 1);
  CHECK(d.inputs["r"] == 2);
  CHECK(cmd_delta(t2s2(), CohClass{{2, 4}}, Orientation1{1}, 1).outputs["components"].empty());
  CHECK_THROWS_AS(cmd_delta(t2s2(), CohClass{{2, 4}}, Orientation1{1}, -1), ValidationError);

  try {
    cmd_delta(t2s2(), CohClass{{2, 3}}, Orientation1{1});
    FAIL("expected NotCharacteristic");
  } catch (const NotCharacteristic& e) {
    CHECK(e.violated_index() == 0);
  }
}

TEST_CASE("chamber") {
  const Report a = cmd_chamber(p2(), CohClass{{3}}, RatClass{{1}}, RatClass{{0}});
  CHECK(a.outputs["sheet"] == "H0");
  CHECK(a.outputs["side"] == "-");
  CHECK(a.outputs["c_good"] == true);

  const Report b = cmd_chamber(p2(), CohClass{{3}}, RatClass{{1}}, RatClass{{3}});
  CHECK(b.outputs["on_wall"] == true);
  CHECK(b.outputs["side"].is_null());
  CHECK(b.outputs["c_good"] == false);

  const Report c = cmd_chamber(p2(), CohClass{{3}}, RatClass{{-1}}, RatClass{{0}});
  CHECK(c.outputs["sheet"] == "-H0");
  CHECK(c.outputs["side"] == "+");

  CHECK_THROWS_AS(cmd_chamber(p2(), CohClass{{3}}, RatClass{{0}}, RatClass{{0}}), NotInPositiveCone);
}

TEST_CASE("resolve") {
  const Report a = cmd_resolve(p2(), CohClass{{3}}, Orientation1{1});
  CHECK(degree0(a.outputs["plus"]["components"]) == "1");
  CHECK(degree0(a.outputs["minus"]["components"]) == "0");
  CHECK(a.outputs["vanishing_side"] == "-");
  CHECK(a.outputs["vanishing_side_source"] == "catalog");
  CHECK(a.warnings.size() == 1);

  const Report b = cmd_resolve(p2(), CohClass{{-3}}, Orientation1{1});
  CHECK(degree0(b.outputs["plus"]["components"]) == "0");
  CHECK(degree0(b.outputs["minus"]["components"]) == "-1");
  CHECK(b.warnings.empty());

  const Report c = cmd_resolve(p2(), CohClass{{9}}, Orientation1{1});
  CHECK(c.outputs["w_c"] == 18);
  CHECK(degree0(c.outputs["plus"]["components"]) == "1");
  CHECK(c.outputs["minus"]["components"].empty());

  const Report d = cmd_resolve(p2(), CohClass{{3}}, Orientation1{1}, Side::Plus);
  CHECK(d.outputs["vanishing_side_source"] == "argument");
  CHECK(degree0(d.outputs["minus"]["components"]) == "-1");

  CHECK_THROWS_AS(cmd_resolve(open_model("catalog:sigma2xs2"), CohClass{{0, 0}}, Orientation1{1}),
                  NotApplicableError);
  CHECK_NOTHROW(cmd_resolve(open_model("catalog:sigma2xs2"), CohClass{{0, 0}}, Orientation1{1}, Side::Minus));
  CHECK_THROWS_AS(cmd_resolve(t2s2(), CohClass{{2, -2}}, Orientation1{1}), OnWallError);
}

TEST_CASE("table") {
  const Report a = cmd_table(p2(), 5, Orientation1{1});
  const auto& rows = a.outputs["rows"];
  REQUIRE(rows.size() == 6);
  const int cs[] = {-5, -3, -1, 1, 3, 5};
  const int ws[] = {4, 0, -2, -2, 0, 4};
  const char* plus[] = {"0", "0", "0", "0", "1", "1"};
  const char* minus[] = {"-1", "-1", "0", "0", "0", "0"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rows[i]["c"] == json::array({cs[i]}));
    CHECK(rows[i]["w_c"] == ws[i]);
    CHECK(degree0(rows[i]["resolved"]["plus"]["components"]) == plus[i]);
    CHECK(degree0(rows[i]["resolved"]["minus"]["components"]) == minus[i]);
  }
  REQUIRE(a.warnings.size() == 1);
  CHECK(a.warnings[0].find("c = 3 gives SW(-) = 0") != std::string::npos);

  const Report u = cmd_table(open_model("catalog:u-plus-minus1"), 1, Orientation1{1});
  CHECK(u.outputs["rows"].size() == 2);
  const Report t = cmd_table(t2s2(), 1, Orientation1{1});
  REQUIRE(t.outputs["rows"].size() == 1);
  CHECK(t.outputs["rows"][0]["c"] == json::parse("[0,0]"));
  CHECK(t.outputs["rows"][0].contains("note"));
  CHECK(t.outputs["rows"][0]["resolved"].is_null());

  CHECK_THROWS_AS(cmd_table(p2(), 0, Orientation1{1}), ValidationError);
  CHECK(to_machine(cmd_table(t2s2(), 4, Orientation1{-1})) ==
        to_machine(cmd_table(t2s2(), 4, Orientation1{-1})));
}

TEST_CASE("coordinate conversion") {
  CHECK(integral_class({1, -2}, 2) == CohClass{{1, -2}});
  CHECK(integral_class({Rational(4, 2)}, 1) == CohClass{{2}});
  CHECK_THROWS_AS(integral_class({Rational(1, 2)}, 1), ValidationError);
  CHECK_THROWS_AS(integral_class({1}, 2), ValidationError);
  CHECK_THROWS_AS(integral_class({Rational(Integer(1) << 40)}, 1), ValidationError);
  CHECK(rational_class({Rational(1, 3)}, 1) == RatClass{{Rational(1, 3)}});
  CHECK_THROWS_AS(rational_class({1, 2}, 1), ValidationError);
}
