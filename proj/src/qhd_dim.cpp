#include "qhd/qhd_dim.hpp"

#include <stdexcept>

namespace qhd {

std::int64_t smoothing_component_dimension(const DimensionInput& in) {
  if (in.h1 < 0) throw std::invalid_argument("smoothing_component_dimension: h1 must be >= 0");
  if (!is_negative_definite(in.graph))
    throw std::invalid_argument("smoothing_component_dimension: graph is not negative definite");
  return in.h1 + sum_d_minus_3(in.graph);
}

std::string ExclusionVerdict::to_string() const {
  return std::string(verdict == Verdict::Excluded ? "EXCLUDED" : "INCONCLUSIVE") + ": " + reason;
}

ExclusionVerdict exclusion_verdict(const ResolutionGraph& g, bool taut) {
  ExclusionVerdict v;
  v.sum_d_minus_3 = sum_d_minus_3(g);
  const std::string s = "sum(d_i - 3) = " + std::to_string(v.sum_d_minus_3);
  if (taut && v.sum_d_minus_3 <= 0) {
    v.verdict = Verdict::Excluded;
    v.reason = s + " and the graph is taut, so a smoothing component would have dimension <= 0";
  } else if (!taut) {
    v.reason = s + "; tautness is not asserted, so h1 is not determined by the graph";
  } else {
    v.reason = s + " > 0";
  }
  return v;
}

}  // namespace qhd
