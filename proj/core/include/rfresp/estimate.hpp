#pragma once

#include <optional>
#include <vector>

#include "rfresp/dsp.hpp"
#include "rfresp/motion.hpp"
#include "rfresp/rate_series.hpp"
#include "rfresp/select.hpp"
#include "rfresp/trace.hpp"

namespace rfresp {

std::string to_string(EstimationMethod method);
EstimationMethod estimation_method_from_string(const std::string& name);

struct PipelineConfig {
    Technology technology = Technology::csi;
    EstimationMethod method = EstimationMethod::psd;
    bool stream_select = true;
    MotionConfig motion;
    double window_s = 30.0;
    double tick_s = 5.0;
    FrequencyGrid grid;

    void validate() const;
};

/// Band power at every grid frequency averaged over kept streams.
std::vector<double> average_grid_power(const Window& w, const StreamMask& mask,
                                       const FrequencyGrid& grid);

/// Grid frequency with the maximum stream-averaged band power; ties resolve
/// to the lowest frequency.
double estimate_psd(const Window& w, const StreamMask& mask, const FrequencyGrid& grid);

/// Inter-breath-interval estimate: per kept stream, peak intervals within
/// [2.5, 10] s are averaged; the rate is the inverse of the mean of the
/// per-stream means. Streams with no valid interval contribute nothing;
/// absent when no stream contributes.
std::optional<double> estimate_ibi(const Window& w, const StreamMask& mask, double fs);

/// Full pipeline: preprocess, low/high-pass filter, then every tick_s
/// recompute the stream mask, estimate, and suppress on detected motion.
/// First estimate at t0 + window_s. Traces shorter than one window yield an
/// empty series.
RateSeries run_pipeline(const RawTrace& trace, const PipelineConfig& cfg);

/// Ground-truth rate from the four polysomnograph channels: same filter
/// chain, no stream selection, PSD estimation.
RateSeries ground_truth_rr(const RawTrace& poly);

}  // namespace rfresp
