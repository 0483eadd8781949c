#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netvuln/errors.hpp"
#include "netvuln/graph.hpp"

namespace netvuln {

/// One box cover: the number of boxes and the per-vertex box id.
///
/// A box is a set of vertices whose pairwise distances are all strictly
/// smaller than the box size; vertices of different components never share
/// a box.
struct BoxCover {
    int box_count = 0;
    std::vector<int> box_of;
};

/// Covers the graph once with greedy coloring of the dual conflict relation
/// (two vertices conflict iff their distance is >= box_size, with
/// cross-component distance treated as infinite). Vertices are processed in
/// the given order; each takes the smallest box it does not conflict with.
/// Throws ParameterError for box_size < 1 or a malformed ordering.
BoxCover cover_once(const Graph& g, const DistanceMatrix& dm, int box_size,
                    std::span<const int> ordering);

/// Sampled mean box counts N_B per box size l_B.
struct BoxCoverCurve {
    std::vector<int> sizes;                         // 1 .. max component diameter + 1
    std::vector<double> mean_boxes;                 // mean N_B per size over runs
    std::vector<std::vector<int>> raw_boxes;        // [size][run]
    int runs = 0;
    int component_count = 0;                        // curve plateau level; 0 when unknown
    std::vector<std::vector<int>> best_assignment;  // [size] -> box ids of the best run
};

/// Runs `runs` random-ordering covers per box size, from 1 up to the largest
/// component diameter + 1. Per-run generators derive from (seed, size, run),
/// so results are reproducible and runs can be evaluated independently.
/// Within a run, the cover kept at each size is the better of the fresh
/// greedy cover and the previous size's cover (which stays valid at any
/// larger size), so box counts never increase with the size.
BoxCoverCurve box_cover_curve(const Graph& g, const DistanceMatrix& dm, int runs,
                              std::uint64_t seed);
BoxCoverCurve box_cover_curve(const Graph& g, int runs, std::uint64_t seed);

/// Fitted box-counting dimension: N_B ~ l_B^(-dimension).
struct FractalFit {
    double dimension = 0.0; // |slope| of the log-log regression
    double intercept = 0.0; // log-space intercept
    double r2 = 0.0;
    int fit_lo = 1;         // box-size interval actually used
    int fit_hi = 1;
    int points = 0;
};

struct FitOptions {
    /// Box-size interval to fit; replaces the default plateau truncation.
    std::optional<std::pair<int, int>> size_range;
    /// Aggregate runs as exp(mean(ln N_B)) instead of the arithmetic mean.
    bool geometric_mean = false;
};

/// Ordinary least squares on (ln l_B, ln N_B). The default range keeps every
/// size up to the first one whose mean reaches the component count and drops
/// the plateau after it. Throws FitError with fewer than two usable points.
FractalFit fit_dimension(const BoxCoverCurve& curve, const FitOptions& options = {});

} // namespace netvuln
