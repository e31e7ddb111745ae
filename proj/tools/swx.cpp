// swx: chamber-resolved Seiberg-Witten invariants for b+ = 1.
//
//   swx <info|delta|chamber|resolve|table> <manifest-path> [options]
//
// Exit codes: 0 success, 1 usage, 2 domain/validation error, 3 I/O error.

#include "swx/commands.hpp"
#include "swx/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<swx::Rational> parse_list(const std::string& text, const char* flag) {
  try {
    return swx::parse_rational_list(text);
  } catch (const swx::ValidationError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

swx::Orientation1 parse_o1(const std::string& text) {
  if (text == "+1" || text == "1") return swx::Orientation1{1};
  if (text == "-1") return swx::Orientation1{-1};
  throw UsageError("--o1 must be +1 or -1");
}

std::optional<swx::Side> parse_side(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "+") return swx::Side::Plus;
  if (text == "-") return swx::Side::Minus;
  throw UsageError("--vanish must be + or -");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chamber-resolved Seiberg-Witten invariants of 4-manifolds with b+ = 1"};
  app.require_subcommand(1);

  std::string manifest, c_text, omega_text, b_text, o1_text = "+1", vanish_text, format = "text";
  std::optional<int> degree;
  int box = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("manifest", manifest, "Manifest path or catalog:<key>")->required();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* info = app.add_subcommand("info", "Model summary and validation");
  add_common(info);

  auto* delta = app.add_subcommand("delta", "Wall-crossing difference SW(+) - SW(-)");
  add_common(delta);
  delta->add_option("--c", c_text, "Characteristic class, comma separated")->required();
  delta->add_option("--o1", o1_text, "Orientation of H1 (+1 or -1)");
  delta->add_option("--r", degree, "Report a single degree");

  auto* chamber = app.add_subcommand("chamber", "Chamber of a period pair");
  add_common(chamber);
  chamber->add_option("--c", c_text, "Characteristic class")->required();
  chamber->add_option("--omega", omega_text, "Period class of positive square")->required();
  chamber->add_option("--b", b_text, "Twist class (default 0)");

  auto* resolve = app.add_subcommand("resolve", "Chamber values from a vanishing chamber");
  add_common(resolve);
  resolve->add_option("--c", c_text, "Characteristic class")->required();
  resolve->add_option("--o1", o1_text, "Orientation of H1 (+1 or -1)");
  resolve->add_option("--vanish", vanish_text, "Side where the invariant vanishes (+ or -)");

  auto* table = app.add_subcommand("table", "Characteristic classes in a box");
  add_common(table);
  table->add_option("--box", box, "Coordinate bound N >= 1")->required()->check(CLI::Range(1, 1000000));
  table->add_option("--o1", o1_text, "Orientation of H1 (+1 or -1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const swx::Orientation1 o1 = parse_o1(o1_text);
    const std::optional<swx::Side> vanish = parse_side(vanish_text);
    std::vector<swx::Rational> c_raw, omega_raw, b_raw;
    if (!c_text.empty()) c_raw = parse_list(c_text, "--c");
    if (!omega_text.empty()) omega_raw = parse_list(omega_text, "--omega");
    if (!b_text.empty()) b_raw = parse_list(b_text, "--b");

    const swx::ModelSource model = swx::open_model(manifest);
    const std::size_t b2 = model.model.b2();

    swx::Report report;
    if (*info) {
      report = swx::cmd_info(model);
    } else if (*delta) {
      report = swx::cmd_delta(model, swx::integral_class(c_raw, b2), o1, degree);
    } else if (*chamber) {
      if (b_raw.empty()) b_raw.assign(b2, swx::Rational(0));
      report = swx::cmd_chamber(model, swx::integral_class(c_raw, b2),
                                swx::rational_class(omega_raw, b2), swx::rational_class(b_raw, b2));
    } else if (*resolve) {
      report = swx::cmd_resolve(model, swx::integral_class(c_raw, b2), o1, vanish);
    } else if (*table) {
      report = swx::cmd_table(model, box, o1);
    }

    if (format == "machine") std::cout << swx::to_machine(report) << "\n";
    else std::cout << swx::to_text(report);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const swx::Error& e) {
    std::cerr << swx::error_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == swx::ErrorCode::Io ? kExitIo : kExitDomain;
  }
}
