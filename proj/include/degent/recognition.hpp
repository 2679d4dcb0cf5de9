#pragma once

#include <array>
#include <optional>

#include "degent/graph.hpp"

namespace degent {

struct RecognitionResult {
    bool verdict = false;
    // For a negative threshold/difference verdict: vertices (u, v, w, x)
    // with uv, wx edges and uw, vx non-edges (cross edges for difference).
    std::optional<std::array<int, 4>> witness;
};

// Threshold test by elimination: repeatedly delete an isolated or
// dominating vertex; threshold iff the graph empties.
RecognitionResult is_threshold(const Graph& g);

// Independent check used to cross-validate the elimination: scan for the
// forbidden configuration directly.
RecognitionResult threshold_by_forbidden_config(const Graph& g);

// Difference test: bipartite and no pair of cross edges x1y1, x2y2 with
// x1y2, x2y1 both absent (applied globally, so e.g. 2K2 is rejected).
RecognitionResult is_difference(const Graph& g);

// Degree-sequence characterization for connected bipartite graphs without
// isolated vertices: D(X) equals the conjugate of D(Y). Test-only cross-check.
bool difference_by_conjugate_condition(const Graph& g);

}  // namespace degent
