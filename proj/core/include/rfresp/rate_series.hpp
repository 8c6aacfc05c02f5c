#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rfresp {

enum class EstimationMethod { psd, ibi };

/// One respiratory-rate estimate. An absent f_hat means no rate was produced
/// for the tick, either because the estimator failed (IBI with no usable
/// peaks) or because motion suppressed it.
struct RateEstimate {
    double t = 0.0;
    std::optional<double> f_hat;
    EstimationMethod method = EstimationMethod::psd;
    bool suppressed_by_motion = false;
};

struct RateSeries {
    std::vector<RateEstimate> estimates;
    double tick = 5.0;

    std::size_t size() const { return estimates.size(); }
    bool empty() const { return estimates.empty(); }
};

/// Estimate paired with the ground-truth value nearest in time.
struct AlignedPair {
    double t = 0.0;        // estimate tick time
    double f_gt = 0.0;
    std::optional<double> f_hat;
    bool suppressed_by_motion = false;
};

/// Pairs every estimate tick with the nearest ground-truth tick (ties resolve
/// to the earlier timestamp). Output length equals est.size().
std::vector<AlignedPair> align_nearest(const RateSeries& est, const RateSeries& gt);

}  // namespace rfresp
