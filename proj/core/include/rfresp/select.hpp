#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rfresp {

struct StreamMask {
    std::vector<bool> keep;

    std::size_t size() const { return keep.size(); }
    std::size_t kept_count() const;
};

StreamMask keep_all(std::size_t stream_count);

/// Keep streams with variance <= the 50th percentile.
StreamMask select_cir(std::span<const double> variance);

/// Receive-antenna group whose subcarriers occupy the lower or upper half of
/// the stream index range.
enum class CsiGroup { a, b };

/// Score each antenna group by its min/mean/median/max variance (one point
/// per statistic strictly lower than the other group's) and drop the
/// lower-scoring group. Ties drop the group dropped at the previous tick;
/// `prev_filtered` is updated to the group dropped now.
StreamMask select_csi(std::span<const double> variance, CsiGroup& prev_filtered);

/// Keep streams with variance between the 25th and 75th percentile. When
/// fewer than two streams fall in the band, the two nearest the median are
/// kept instead.
StreamMask select_rss(std::span<const double> variance);

/// SUB has a single stream; it is always kept. Throws std::invalid_argument
/// for any other stream count.
StreamMask select_sub(std::size_t stream_count);

}  // namespace rfresp
