#include "rfresp/rate_series.hpp"

#include <cmath>
#include <stdexcept>

namespace rfresp {

std::vector<AlignedPair> align_nearest(const RateSeries& est, const RateSeries& gt) {
    if (est.empty() || gt.empty())
        throw std::invalid_argument("align_nearest requires nonempty series");

    std::vector<AlignedPair> pairs;
    pairs.reserve(est.size());
    std::size_t j = 0;  // gt cursor, both series are time-ordered
    for (const auto& e : est.estimates) {
        while (j + 1 < gt.size() &&
               std::abs(gt.estimates[j + 1].t - e.t) < std::abs(gt.estimates[j].t - e.t))
            ++j;
        // equidistant neighbours resolve to the earlier gt tick, which the
        // strict < above already guarantees
        AlignedPair p;
        p.t = e.t;
        p.f_gt = gt.estimates[j].f_hat.value_or(std::nan(""));
        p.f_hat = e.f_hat;
        p.suppressed_by_motion = e.suppressed_by_motion;
        pairs.push_back(p);
    }
    return pairs;
}

}  // namespace rfresp
