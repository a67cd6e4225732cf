#pragma once

#include <map>

#include "superpoint/localized.hpp"
#include "superpoint/report.hpp"
#include "superpoint/vectorial.hpp"

namespace superpoint {

/// Rewrites a chart-i localized element over the odd basis
/// {eta_j = xi_j - (x_j/x_i) xi_i (j != i), xi_i}: in the result the odd slot
/// j != i stands for eta_j while slot i still stands for xi_i. An element
/// lies in Lambda(E) over the chart iff slot i never occurs.
LocalizedElement frame_expand(const LocalizedElement& u, int chart);

/// Inverse substitution: interprets slot j as eta_j and expands back to the
/// xi coordinates. frame_collapse(frame_expand(u)) == u.
LocalizedElement frame_collapse(const LocalizedElement& e, int chart);

/// True when the reduced denominator is a power of x_chart (times a constant).
bool chart_denominator_ok(const LocalizedElement& u, int chart);

/// The (gamma_0, gamma_1) pair of a derivation acting on a chart: gamma_1 on
/// the affine coordinates x_j/x_i, gamma_0 on the frame sections eta_j, both
/// expanded over the frame. Construction verifies both Leibniz conditions of
/// the pair decomposition on the chart generators and throws when gamma does
/// not preserve the chart algebra Lambda(E).
struct GammaPair {
  int n = 0;
  int chart = 1;
  int degree = 0;
  std::map<int, LocalizedElement> gamma0;  // j != chart -> image of eta_j
  std::map<int, LocalizedElement> gamma1;  // j != chart -> image of x_j/x_chart
};
GammaPair gamma_pair(const SuperDerivation& gamma, int chart);

/// Verifies the W_n -> Der O^a construction: chart preservation (including
/// the quotient-rule identity and the linear-in-x hypothesis of the stalk
/// lemma), preservation of ker d, bracket compatibility on all basis pairs,
/// and injectivity by exact rank.
Report verify_w_action(int n);

}  // namespace superpoint
