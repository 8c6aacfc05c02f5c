#pragma once

#include <cstdint>
#include <vector>

#include "rfresp/evaluate.hpp"
#include "rfresp/rate_series.hpp"
#include "rfresp/trace.hpp"

namespace rfresp {

/// Breathing frequency from t_start until the next segment (or trace end).
struct RateSegment {
    double t_start = 0.0;
    double f_hz = 0.25;
};

/// Motion burst: a bounded random-walk excursion added to every stream,
/// scaled by `magnitude` times the base breathing amplitude.
struct MotionBurst {
    double t_start = 0.0;
    double duration = 10.0;
    double magnitude = 10.0;
};

enum class RssQuantization { none, one_db };

/// Scenario with known rate and motion ground truth. Streams default to
/// breathing carriers with seeded per-stream gains and phases;
/// `noise_only_streams` carry amplified noise and no tone, `dead_streams`
/// carry almost nothing.
struct SynthScenario {
    std::vector<RateSegment> rate_schedule = {{0.0, 0.25}};
    std::vector<MotionBurst> motion_bursts;
    double duration_s = 300.0;
    double noise_snr_db = 20.0;
    RssQuantization rss_quantization = RssQuantization::none;
    std::uint64_t seed = 1;
    double tone_amplitude = 1.0;  // dB for CSI/RSS/SUB, radians for CIR phases
    std::vector<std::size_t> noise_only_streams;
    double noise_only_gain = 10.0;  // noise amplitude multiplier for those streams
    std::vector<std::size_t> dead_streams;

    void validate(const TechnologyProfile& profile) const;
    double rate_at(double t) const;
};

struct SynthResult {
    RawTrace trace;
    RateSeries ground_truth;  // schedule sampled at the 5 s estimation ticks
    std::vector<Interval> motion_intervals;
};

SynthResult synth_trace(const TechnologyProfile& profile, const SynthScenario& scenario);

}  // namespace rfresp
