#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qhd/resgraph.hpp"

namespace qhd {

struct DimensionInput {
  ResolutionGraph graph;
  /// h^1 of the sheaf of logarithmic vector fields; an analytic input.
  std::int64_t h1 = 0;
  std::optional<bool> taut;
};

/// h1 + sum over vertices of (d_i - 3).
std::int64_t smoothing_component_dimension(const DimensionInput& in);

enum class Verdict { Excluded, Inconclusive };

struct ExclusionVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::int64_t sum_d_minus_3 = 0;
  std::string reason;
  std::string to_string() const;
};

/// A taut graph with sum(d_i - 3) <= 0 would need a smoothing component of
/// dimension <= 0, so it carries no rational homology disk smoothing.
ExclusionVerdict exclusion_verdict(const ResolutionGraph& g, bool taut);

}  // namespace qhd
