#pragma once

#include "rfresp/dsp.hpp"
#include "rfresp/trace.hpp"

namespace rfresp {

enum class MotionMethod { none, mabd, mvbd, ave, fsd, mavbd };

std::string to_string(MotionMethod method);
MotionMethod motion_method_from_string(const std::string& name);

struct MotionConfig {
    MotionMethod method = MotionMethod::none;
    double short_window = 2.0;   // seconds
    double long_window = 30.0;   // seconds
    double threshold = 1.0;
    FrequencyGrid grid;          // FSD only

    void validate() const;
};

/// Shipped default threshold for a technology/method pair, calibrated on
/// synthetic scenarios to suppress roughly 10% of ticks under one
/// <=30 s motion event per 5 minutes.
double default_motion_threshold(Technology tech, MotionMethod method);

/// Mean over streams of |short mean - long mean| / max(|long mean|, 1e-9),
/// both means trailing at the window end.
double score_mabd(const Window& w, double short_s, double long_s);

/// Mean over streams of |short variance - long variance|.
double score_mvbd(const Window& w, double short_s, double long_s);

/// Mean over streams of the trailing short-window variance.
double score_ave(const Window& w, double short_s);

/// Max over the stream-averaged grid band powers divided by the mean of the
/// non-max powers. 1 for an all-zero window. High means periodic.
double score_fsd(const Window& w, const FrequencyGrid& grid);

/// MABD/MVBD/AVE flag when their score exceeds the threshold; FSD flags when
/// its ratio falls below it; MAVBD flags when both MABD and MVBD flag.
bool detect_motion(const Window& w, const MotionConfig& cfg);

}  // namespace rfresp
