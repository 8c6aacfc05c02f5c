#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rfresp/trace.hpp"

namespace rfresp {

enum class FilterKind { low_pass, high_pass };

/// One second-order section, direct form II transposed. First-order sections
/// are stored with b2 = a2 = 0.
struct BiquadSection {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct BiquadCascade {
    std::vector<BiquadSection> sections;
    double fs = 1.0;

    /// Complex frequency response at f Hz.
    std::complex<double> response_at(double f) const;
    double gain_at(double f) const;
    /// All poles strictly inside the unit circle.
    bool stable() const;
};

/// Digital Butterworth via the analog prototype and a frequency-prewarped
/// bilinear transform, factored into second-order sections. |H(cutoff)| is
/// 1/sqrt(2) by construction. Throws std::invalid_argument when
/// cutoff >= fs/2 or the arguments are otherwise unusable.
BiquadCascade design_butterworth(int order, double cutoff_hz, double fs, FilterKind kind);

/// Single-stream causal filter with explicit state. prime() sets the state to
/// the steady-state response for a constant input, which removes startup
/// transients on signals with a large DC offset.
class StreamingFilter {
public:
    explicit StreamingFilter(const BiquadCascade& cascade);
    void prime(double x0);
    double step(double x);

private:
    const BiquadCascade* cascade_;
    std::vector<std::array<double, 2>> state_;
};

/// Per-stream causal filtering; state primed on each stream's first sample.
/// Throws std::invalid_argument when the matrix rate differs from the design
/// rate.
StreamMatrix apply_filter(const BiquadCascade& cascade, const StreamMatrix& m);

/// Per-stream sliding median. The window length round(window_s * fs) is
/// forced odd; edges replicate the first/last sample.
StreamMatrix median_filter(const StreamMatrix& m, double window_s);

/// Per-stream trailing population variance over round(window_s * fs) samples.
/// Ticks before one full window use all samples so far (minimum 2).
StreamMatrix moving_variance(const StreamMatrix& m, double window_s);

/// Population variance of one span (two-pass).
double population_variance(std::span<const double> v);

/// Lag in [-max_lag, +max_lag] maximizing sum_i a[i] * b[i + lag]. Ties
/// resolve to the smallest |lag|, negative before positive.
int xcorr_lag(std::span<const double> a, std::span<const double> b, int max_lag);

/// Closed-form minimizer of ||ref - e^{j theta} x||: angle of
/// sum_i ref[i] * conj(x[i]), in (-pi, pi]. Zero inner product returns 0.
double optimal_rotation(std::span<const std::complex<double>> ref,
                        std::span<const std::complex<double>> x);

/// Upsampling by frequency-domain zero padding. factor = 1 is the identity.
std::vector<std::complex<double>> upsample_complex(std::span<const std::complex<double>> x,
                                                   int factor);

/// Uniform frequency grid {f_min, f_min + f_step, ..., f_max} inclusive.
struct FrequencyGrid {
    double f_min = 0.1;
    double f_max = 0.4;
    double f_step = 0.002;

    std::size_t size() const;
    double at(std::size_t k) const { return f_min + static_cast<double>(k) * f_step; }
    void validate() const;
};

/// |sum_n v[n] e^{-j 2 pi f n / fs}|^2 / N.
double spectral_power(std::span<const double> v, double fs, double f);

/// spectral_power of one stream of a window. Throws when f >= fs/2.
double band_power(const Window& w, std::size_t stream, double f);

/// Local maxima with topographic prominence >= min_prom * (max - min of v),
/// thinned so surviving peaks are >= min_dist_s apart (higher peak wins).
/// Returned indices are ascending.
std::vector<std::size_t> find_peaks(std::span<const double> v, double fs, double min_dist_s,
                                    double min_prom);

/// Linear-interpolation percentile of the order statistics, q in [0, 1].
double percentile(std::vector<double> values, double q);

}  // namespace rfresp
