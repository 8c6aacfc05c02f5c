#pragma once

#include <complex>
#include <vector>

#include "rfresp/trace.hpp"

namespace rfresp {

inline constexpr int kCirRawTaps = 20;
inline constexpr int kCirUpsampleFactor = 16;
inline constexpr int kCirMaxLag = 80;          // upsampled taps
inline constexpr double kCirEwmaAlpha = 0.05;  // reference update weight per sample
inline constexpr double kDbFloor = -120.0;     // dB floor for nonpositive magnitudes
inline constexpr int kSubDownsample = 30;

/// Running reference for CIR lag/phase alignment: an exponentially weighted
/// average of the aligned measurements.
struct CirAlignState {
    std::vector<std::complex<double>> reference;
    double ewma_alpha = kCirEwmaAlpha;
    bool initialized = false;
};

struct PreprocessOutput {
    StreamMatrix y;
    double effective_fs = 0.0;
};

/// Per-sample: upsample x16, lag-align against the reference by magnitude
/// cross-correlation (zeros fill vacated taps), rotate onto the reference,
/// then update the reference. Output streams are the tap phases in (-pi, pi].
PreprocessOutput preprocess_cir(const NormalizedTrace& trace, CirAlignState& state);

/// dB magnitude of each subcarrier followed by a 0.7 s median filter.
PreprocessOutput preprocess_csi(const NormalizedTrace& trace);

/// Mean of consecutive 30-sample chunks, dB, then a 0.45 s median filter.
PreprocessOutput preprocess_sub(const NormalizedTrace& trace);

/// RSS needs no processing beyond conversion to a real matrix.
PreprocessOutput preprocess_rss(const NormalizedTrace& trace);

/// Dispatch on the trace's technology. CIR requires an alignment state;
/// POLY passes through as a real matrix like RSS.
PreprocessOutput preprocess(const NormalizedTrace& trace, CirAlignState* cir_state = nullptr);

}  // namespace rfresp
