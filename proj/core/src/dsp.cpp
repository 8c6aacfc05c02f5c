#include "rfresp/dsp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfresp {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_phase(double theta) {
    // map [-pi, pi] output of arg/atan2 onto (-pi, pi]
    if (theta <= -kPi) theta += 2.0 * kPi;
    return theta;
}
}  // namespace

std::complex<double> BiquadCascade::response_at(double f) const {
    const double w = 2.0 * kPi * f / fs;
    const std::complex<double> z1 = std::polar(1.0, -w);
    const std::complex<double> z2 = z1 * z1;
    std::complex<double> h = 1.0;
    for (const auto& s : sections)
        h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
    return h;
}

double BiquadCascade::gain_at(double f) const { return std::abs(response_at(f)); }

bool BiquadCascade::stable() const {
    for (const auto& s : sections) {
        if (std::abs(s.a2) >= 1.0) return false;
        if (std::abs(s.a1) >= 1.0 + s.a2) return false;
    }
    return true;
}

BiquadCascade design_butterworth(int order, double cutoff_hz, double fs, FilterKind kind) {
    if (order < 1) throw std::invalid_argument("filter order must be >= 1");
    if (fs <= 0.0) throw std::invalid_argument("sample rate must be positive");
    if (cutoff_hz <= 0.0 || cutoff_hz >= fs / 2.0)
        throw std::invalid_argument("cutoff must lie strictly inside (0, fs/2)");

    const double wc = 2.0 * fs * std::tan(kPi * cutoff_hz / fs);  // prewarped analog cutoff

    BiquadCascade cascade;
    cascade.fs = fs;
    const int pair_count = order / 2;
    for (int k = 1; k <= pair_count; ++k) {
        // analog prototype pole e^{j pi (2k + n - 1) / 2n}, left half plane
        const double angle = kPi * (2.0 * k + order - 1.0) / (2.0 * order);
        const std::complex<double> proto = std::polar(1.0, angle);
        const std::complex<double> p_analog =
            kind == FilterKind::low_pass ? wc * proto : wc / proto;
        const std::complex<double> zp = (2.0 * fs + p_analog) / (2.0 * fs - p_analog);

        BiquadSection s;
        s.a1 = -2.0 * zp.real();
        s.a2 = std::norm(zp);
        if (kind == FilterKind::low_pass) {
            const double g = (1.0 + s.a1 + s.a2) / 4.0;  // zeros at z=-1, unit DC gain
            s.b0 = g;
            s.b1 = 2.0 * g;
            s.b2 = g;
        } else {
            const double g = (1.0 - s.a1 + s.a2) / 4.0;  // zeros at z=+1, unit Nyquist gain
            s.b0 = g;
            s.b1 = -2.0 * g;
            s.b2 = g;
        }
        cascade.sections.push_back(s);
    }
    if (order % 2 == 1) {
        // real prototype pole at -1 maps to -wc for both kinds
        const double zp = (2.0 * fs - wc) / (2.0 * fs + wc);
        BiquadSection s;
        s.a1 = -zp;
        if (kind == FilterKind::low_pass) {
            const double g = (1.0 + s.a1) / 2.0;
            s.b0 = g;
            s.b1 = g;
        } else {
            const double g = (1.0 - s.a1) / 2.0;
            s.b0 = g;
            s.b1 = -g;
        }
        cascade.sections.push_back(s);
    }
    return cascade;
}

StreamingFilter::StreamingFilter(const BiquadCascade& cascade)
    : cascade_(&cascade), state_(cascade.sections.size(), {0.0, 0.0}) {}

void StreamingFilter::prime(double x0) {
    // steady-state response to a constant x0, section by section
    double x = x0;
    for (std::size_t i = 0; i < state_.size(); ++i) {
        const auto& s = cascade_->sections[i];
        const double y = x * (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
        state_[i][0] = (s.b1 + s.b2) * x - (s.a1 + s.a2) * y;
        state_[i][1] = s.b2 * x - s.a2 * y;
        x = y;
    }
}

double StreamingFilter::step(double x) {
    for (std::size_t i = 0; i < state_.size(); ++i) {
        const auto& s = cascade_->sections[i];
        const double y = s.b0 * x + state_[i][0];
        state_[i][0] = s.b1 * x - s.a1 * y + state_[i][1];
        state_[i][1] = s.b2 * x - s.a2 * y;
        x = y;
    }
    return x;
}

StreamMatrix apply_filter(const BiquadCascade& cascade, const StreamMatrix& m) {
    if (std::abs(m.fs - cascade.fs) > 1e-9 * cascade.fs)
        throw std::invalid_argument("matrix sample rate does not match the filter design rate");

    StreamMatrix out(m.t0, m.fs, m.stream_count, m.sample_count);
    for (std::size_t s = 0; s < m.stream_count; ++s) {
        auto in = m.stream(s);
        auto dst = out.stream(s);
        StreamingFilter f(cascade);
        if (!in.empty()) f.prime(in[0]);
        for (std::size_t n = 0; n < in.size(); ++n) dst[n] = f.step(in[n]);
    }
    return out;
}

StreamMatrix median_filter(const StreamMatrix& m, double window_s) {
    if (window_s <= 0.0) throw std::invalid_argument("median window must be positive");
    long len = std::lround(window_s * m.fs);
    if (len < 1) len = 1;
    if (len % 2 == 0) ++len;
    const long half = len / 2;
    const long n = static_cast<long>(m.sample_count);

    StreamMatrix out(m.t0, m.fs, m.stream_count, m.sample_count);
    std::vector<double> buf(static_cast<std::size_t>(len));
    for (std::size_t s = 0; s < m.stream_count; ++s) {
        auto in = m.stream(s);
        auto dst = out.stream(s);
        for (long i = 0; i < n; ++i) {
            for (long k = -half; k <= half; ++k) {
                const long idx = std::clamp(i + k, 0L, n - 1);  // replicate padding
                buf[static_cast<std::size_t>(k + half)] = in[static_cast<std::size_t>(idx)];
            }
            auto mid = buf.begin() + half;
            std::nth_element(buf.begin(), mid, buf.end());
            dst[static_cast<std::size_t>(i)] = *mid;
        }
    }
    return out;
}

double population_variance(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) {
        const double d = x - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(v.size());
}

StreamMatrix moving_variance(const StreamMatrix& m, double window_s) {
    const long len = std::lround(window_s * m.fs);
    if (len < 2) throw std::invalid_argument("variance window must cover at least 2 samples");
    if (m.sample_count < 2)
        throw std::invalid_argument("moving_variance needs at least 2 samples");

    StreamMatrix out(m.t0, m.fs, m.stream_count, m.sample_count);
    for (std::size_t s = 0; s < m.stream_count; ++s) {
        auto in = m.stream(s);
        auto dst = out.stream(s);
        for (std::size_t i = 0; i < in.size(); ++i) {
            std::size_t lo = (static_cast<long>(i) - len + 1 > 0)
                                 ? i - static_cast<std::size_t>(len) + 1
                                 : 0;
            std::size_t hi = i + 1;
            if (hi - lo < 2) hi = lo + 2;  // first tick uses the first two samples
            dst[i] = population_variance(in.subspan(lo, hi - lo));
        }
    }
    return out;
}

int xcorr_lag(std::span<const double> a, std::span<const double> b, int max_lag) {
    if (a.size() != b.size()) throw std::invalid_argument("xcorr_lag requires equal lengths");
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= a.size())
        throw std::invalid_argument("max_lag must be smaller than the vector length");

    const long n = static_cast<long>(a.size());
    int best_lag = 0;
    double best = -std::numeric_limits<double>::infinity();
    // visit 0, -1, +1, -2, +2, ... so ties keep the smallest |lag|,
    // negative before positive
    for (int step = 0; step <= max_lag; ++step) {
        for (int sign = 0; sign < (step == 0 ? 1 : 2); ++sign) {
            const int lag = (sign == 0) ? -step : step;
            const long lo = std::max(0L, static_cast<long>(-lag));
            const long hi = std::min(n, n - static_cast<long>(lag));
            double acc = 0.0;
            for (long i = lo; i < hi; ++i)
                acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i + lag)];
            if (acc > best) {
                best = acc;
                best_lag = lag;
            }
        }
    }
    return best_lag;
}

double optimal_rotation(std::span<const std::complex<double>> ref,
                        std::span<const std::complex<double>> x) {
    if (ref.size() != x.size())
        throw std::invalid_argument("optimal_rotation requires equal lengths");
    std::complex<double> inner = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) inner += ref[i] * std::conj(x[i]);
    if (inner == std::complex<double>(0.0, 0.0)) return 0.0;
    return wrap_phase(std::arg(inner));
}

std::vector<std::complex<double>> upsample_complex(std::span<const std::complex<double>> x,
                                                   int factor) {
    if (factor < 1) throw std::invalid_argument("upsample factor must be >= 1");
    const std::size_t n = x.size();
    if (factor == 1 || n == 0) return {x.begin(), x.end()};
    const std::size_t m = n * static_cast<std::size_t>(factor);

    std::vector<std::complex<double>> spec(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += x[i] * std::polar(1.0, -2.0 * kPi * static_cast<double>(k * i) /
                                              static_cast<double>(n));
        spec[k] = acc;
    }

    std::vector<std::complex<double>> padded(m, 0.0);
    if (n % 2 == 0) {
        for (std::size_t k = 0; k < n / 2; ++k) padded[k] = spec[k];
        padded[n / 2] = spec[n / 2] * 0.5;  // split the Nyquist bin
        padded[m - n / 2] = spec[n / 2] * 0.5;
        for (std::size_t k = n / 2 + 1; k < n; ++k) padded[m - n + k] = spec[k];
    } else {
        for (std::size_t k = 0; k <= n / 2; ++k) padded[k] = spec[k];
        for (std::size_t k = n / 2 + 1; k < n; ++k) padded[m - n + k] = spec[k];
    }

    std::vector<std::complex<double>> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n / 2 + 1; ++k)
            acc += padded[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(k) *
                                                   static_cast<double>(i) / static_cast<double>(m));
        for (std::size_t k = m - n / 2; k < m; ++k)
            acc += padded[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(k) *
                                                   static_cast<double>(i) / static_cast<double>(m));
        out[i] = acc / static_cast<double>(n);
    }
    return out;
}

std::size_t FrequencyGrid::size() const {
    return static_cast<std::size_t>(std::lround((f_max - f_min) / f_step)) + 1;
}

void FrequencyGrid::validate() const {
    if (!(f_min < f_max)) throw std::invalid_argument("grid requires f_min < f_max");
    if (f_step <= 0.0) throw std::invalid_argument("grid requires f_step > 0");
}

double spectral_power(std::span<const double> v, double fs, double f) {
    if (v.empty()) return 0.0;
    const double w = -2.0 * kPi * f / fs;
    const double cw = std::cos(w), sw = std::sin(w);
    double cr = 1.0, ci = 0.0;  // running e^{-j 2 pi f n / fs}
    double re = 0.0, im = 0.0;
    for (double x : v) {
        re += x * cr;
        im += x * ci;
        const double nr = cr * cw - ci * sw;
        ci = cr * sw + ci * cw;
        cr = nr;
    }
    return (re * re + im * im) / static_cast<double>(v.size());
}

double band_power(const Window& w, std::size_t stream, double f) {
    if (f >= w.fs() / 2.0) throw std::invalid_argument("frequency must be below fs/2");
    return spectral_power(w.stream(stream), w.fs(), f);
}

namespace {
double peak_prominence(std::span<const double> v, std::size_t peak) {
    const double h = v[peak];
    double left_min = h;
    for (std::size_t j = peak; j-- > 0;) {
        if (v[j] > h) break;
        left_min = std::min(left_min, v[j]);
    }
    double right_min = h;
    for (std::size_t j = peak + 1; j < v.size(); ++j) {
        if (v[j] > h) break;
        right_min = std::min(right_min, v[j]);
    }
    return h - std::max(left_min, right_min);
}
}  // namespace

std::vector<std::size_t> find_peaks(std::span<const double> v, double fs, double min_dist_s,
                                    double min_prom) {
    if (min_dist_s < 0.0) throw std::invalid_argument("min_dist must be nonnegative");
    if (v.size() < 3) return {};

    const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
    const double prom_floor = min_prom * (*hi_it - *lo_it);

    std::vector<std::size_t> candidates;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] > v[i + 1] && peak_prominence(v, i) >= prom_floor)
            candidates.push_back(i);
    }

    const long min_dist = std::lround(min_dist_s * fs);
    if (min_dist <= 1 || candidates.size() < 2) return candidates;

    // higher peak wins; ties go to the earlier peak
    std::vector<std::size_t> order = candidates;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        bool blocked = false;
        for (std::size_t k : kept) {
            const long d = std::labs(static_cast<long>(idx) - static_cast<long>(k));
            if (d < min_dist) {
                blocked = true;
                break;
            }
        }
        if (!blocked) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("percentile of an empty set");
    q = std::clamp(q, 0.0, 1.0);
    std::sort(values.begin(), values.end());
    const double h = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

}  // namespace rfresp
