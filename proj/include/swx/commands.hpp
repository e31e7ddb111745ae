#pragma once

// The swx subcommands as in-process functions. Domain failures surface as
// swx::Error exceptions; the executable maps them to exit codes.

#include "swx/report.hpp"

#include <optional>
#include <string>

namespace swx {

struct ModelSource {
  std::string source;  // path or "catalog:<key>", echoed in reports
  ManifoldModel model;
};

/// load_manifest + build_model.
ModelSource open_model(const std::string& source);

Report cmd_info(const ModelSource& m);

Report cmd_delta(const ModelSource& m, const CohClass& c, Orientation1 o1,
                 std::optional<int> degree = std::nullopt);

Report cmd_chamber(const ModelSource& m, const CohClass& c, const RatClass& omega,
                   const RatClass& b);

/// Uses the catalog vanishing side when `vanish` is empty; throws
/// NotApplicableError when neither is available.
Report cmd_resolve(const ModelSource& m, const CohClass& c, Orientation1 o1,
                   std::optional<Side> vanish = std::nullopt);

/// Throws ValidationError for box < 1.
Report cmd_table(const ModelSource& m, int box, Orientation1 o1);

/// Converts parsed rationals to an integral class; ValidationError if any
/// entry is not an integer or the length differs from b2.
CohClass integral_class(const std::vector<Rational>& coords, std::size_t b2);
RatClass rational_class(const std::vector<Rational>& coords, std::size_t b2);

}  // namespace swx
