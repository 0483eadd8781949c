#include "netvuln/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace netvuln {

namespace {

bool conflicts(const DistanceMatrix& dm, int v, int w, int box_size) {
    const std::int32_t d = dm(v, w);
    return d == kUnreachable || d >= box_size;
}

// Fisher-Yates with an explicitly specified draw so shuffles are
// reproducible across standard library implementations.
void shuffle_order(std::vector<int>& order, std::mt19937_64& rng) {
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
}

std::mt19937_64 run_generator(std::uint64_t seed, int box_size, int run) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(box_size),
                      static_cast<std::uint32_t>(run)};
    return std::mt19937_64(seq);
}

} // namespace

BoxCover cover_once(const Graph& g, const DistanceMatrix& dm, int box_size,
                    std::span<const int> ordering) {
    if (box_size < 1) throw ParameterError("box size must be at least 1");
    const int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n || dm.vertex_count() != n) {
        throw ParameterError("ordering and distance matrix must cover every vertex");
    }
    std::vector<bool> seen(n, false);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[v]) throw ParameterError("ordering must list every vertex once");
        seen[v] = true;
    }

    BoxCover cover;
    cover.box_of.assign(n, -1);
    std::vector<std::vector<int>> boxes;
    for (int v : ordering) {
        int chosen = -1;
        for (int b = 0; b < static_cast<int>(boxes.size()); ++b) {
            bool blocked = false;
            for (int member : boxes[b]) {
                if (conflicts(dm, v, member, box_size)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                chosen = b;
                break;
            }
        }
        if (chosen < 0) {
            chosen = static_cast<int>(boxes.size());
            boxes.emplace_back();
        }
        boxes[chosen].push_back(v);
        cover.box_of[v] = chosen;
    }
    cover.box_count = static_cast<int>(boxes.size());
    return cover;
}

BoxCoverCurve box_cover_curve(const Graph& g, const DistanceMatrix& dm, int runs,
                              std::uint64_t seed) {
    if (runs < 1) throw ParameterError("box covering needs at least one run");
    const int n = g.vertex_count();
    const int max_size = dm.diameter() + 1;

    BoxCoverCurve curve;
    curve.runs = runs;
    curve.component_count = dm.component_count();
    curve.sizes.resize(max_size);
    std::iota(curve.sizes.begin(), curve.sizes.end(), 1);
    curve.raw_boxes.assign(max_size, std::vector<int>(runs, 0));
    curve.best_assignment.assign(max_size, {});
    std::vector<int> best_count(max_size, std::numeric_limits<int>::max());

    std::vector<int> ordering(n);
    for (int run = 0; run < runs; ++run) {
        BoxCover carried;
        carried.box_count = std::numeric_limits<int>::max();
        for (int si = 0; si < max_size; ++si) {
            const int size = curve.sizes[si];
            std::iota(ordering.begin(), ordering.end(), 0);
            auto rng = run_generator(seed, size, run);
            shuffle_order(ordering, rng);
            BoxCover fresh = cover_once(g, dm, size, ordering);
            if (fresh.box_count <= carried.box_count) carried = std::move(fresh);
            curve.raw_boxes[si][run] = carried.box_count;
            if (carried.box_count < best_count[si]) {
                best_count[si] = carried.box_count;
                curve.best_assignment[si] = carried.box_of;
            }
        }
    }

    curve.mean_boxes.resize(max_size);
    for (int si = 0; si < max_size; ++si) {
        long long sum = 0;
        for (int count : curve.raw_boxes[si]) sum += count;
        curve.mean_boxes[si] = static_cast<double>(sum) / runs;
    }
    return curve;
}

BoxCoverCurve box_cover_curve(const Graph& g, int runs, std::uint64_t seed) {
    return box_cover_curve(g, all_pairs_distances(g), runs, seed);
}

FractalFit fit_dimension(const BoxCoverCurve& curve, const FitOptions& options) {
    const int point_count = static_cast<int>(curve.sizes.size());
    if (static_cast<int>(curve.mean_boxes.size()) != point_count) {
        throw ParameterError("curve sizes and means disagree");
    }

    int lo = 0;
    int hi = point_count - 1;
    if (options.size_range) {
        auto [lo_size, hi_size] = *options.size_range;
        if (lo_size > hi_size) throw ParameterError("empty fit range");
        lo = point_count;
        hi = -1;
        for (int i = 0; i < point_count; ++i) {
            if (curve.sizes[i] >= lo_size && curve.sizes[i] <= hi_size) {
                lo = std::min(lo, i);
                hi = std::max(hi, i);
            }
        }
    } else if (curve.component_count >= 1) {
        // Keep the first point that reaches the plateau, drop the rest.
        for (int i = 0; i < point_count; ++i) {
            if (curve.mean_boxes[i] <= curve.component_count) {
                hi = i;
                break;
            }
        }
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = lo; i <= hi && i < point_count; ++i) {
        double value = curve.mean_boxes[i];
        if (options.geometric_mean && !curve.raw_boxes.empty()) {
            double log_sum = 0.0;
            for (int count : curve.raw_boxes[i]) log_sum += std::log(static_cast<double>(count));
            value = std::exp(log_sum / static_cast<double>(curve.raw_boxes[i].size()));
        }
        if (value <= 0.0) continue;
        xs.push_back(std::log(static_cast<double>(curve.sizes[i])));
        ys.push_back(std::log(value));
    }
    if (xs.size() < 2) {
        throw FitError("dimension fit needs at least two usable curve points");
    }

    const double count = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw FitError("dimension fit needs at least two distinct box sizes");
    }

    const double slope = sxy / sxx;
    FractalFit fit;
    fit.dimension = std::abs(slope);
    fit.intercept = mean_y - slope * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += r * r;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    fit.fit_lo = curve.sizes[lo];
    fit.fit_hi = curve.sizes[std::min(hi, point_count - 1)];
    fit.points = static_cast<int>(xs.size());
    return fit;
}

} // namespace netvuln
