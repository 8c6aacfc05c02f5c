#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rfresp/rate_series.hpp"

namespace rfresp {

/// Per-tick absolute rate error in breaths per minute.
struct ErrorSample {
    double t = 0.0;
    double e_bpm = 0.0;
};

struct Interval {
    double t_start = 0.0;
    double t_end = 0.0;

    bool contains(double t) const { return t >= t_start && t <= t_end; }
};

struct EvalReport {
    double median_bpm = 0.0;
    double p95_bpm = 0.0;
    std::vector<std::pair<double, double>> cdf;  // (bpm, fraction <= bpm)
    double pct_removed = 0.0;                    // fraction of ticks with absent f_hat
    std::size_t n_samples = 0;
    std::size_t total_ticks = 0;
    std::vector<double> samples;                 // errors in bpm, estimate order
};

/// e = 60 * |f_gt - f_hat| for pairs with a present estimate; absent pairs
/// are skipped.
std::vector<ErrorSample> rr_error(std::span<const AlignedPair> pairs);

/// Median and 95th percentile by linear-interpolation percentile, empirical
/// CDF at 0.12 bpm resolution, and the removed-tick fraction.
EvalReport summarize(const std::vector<ErrorSample>& errors, std::size_t total_ticks);

struct MannWhitneyResult {
    double u = 0.0;            // U statistic of the first sample
    double p_two_sided = 1.0;
    double p_one_sided = 1.0;  // P(a tends smaller than b)
    bool exact = false;
};

/// Rank-sum U with midrank ties. Exact two-sided p by enumeration when
/// |a|*|b| <= 64 and there are no ties; otherwise a normal approximation
/// with tie and continuity corrections.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

std::vector<ErrorSample> slice_by_intervals(std::span<const ErrorSample> samples,
                                            std::span<const Interval> intervals);
RateSeries slice_by_intervals(const RateSeries& series, std::span<const Interval> intervals);

}  // namespace rfresp
