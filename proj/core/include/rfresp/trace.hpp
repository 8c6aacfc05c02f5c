#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rfresp {

enum class Technology { cir, csi, rss, sub, poly };
enum class ValueKind { complex_value, real_value, integer_value };

std::string to_string(Technology tech);
std::string to_string(ValueKind kind);
Technology technology_from_string(const std::string& name);
ValueKind value_kind_from_string(const std::string& name);

/// Static description of one measurement technology.
struct TechnologyProfile {
    Technology tech = Technology::rss;
    double fs_nominal = 1.0;
    std::size_t stream_count = 1;
    ValueKind value_kind = ValueKind::real_value;
};

/// The profiles of the five supported capture systems.
TechnologyProfile canonical_profile(Technology tech);

/// Timestamped multi-stream measurements as recorded by a device. Real and
/// integer technologies are stored with zero imaginary parts.
struct RawTrace {
    TechnologyProfile profile;
    std::vector<double> timestamps;
    std::vector<std::vector<std::complex<double>>> samples;

    std::size_t size() const { return timestamps.size(); }
    void validate() const;
};

/// Uniformly sampled real stream matrix (stream-major storage).
struct StreamMatrix {
    double t0 = 0.0;
    double fs = 1.0;
    std::size_t stream_count = 0;
    std::size_t sample_count = 0;
    std::vector<double> data;

    StreamMatrix() = default;
    StreamMatrix(double t0, double fs, std::size_t streams, std::size_t samples)
        : t0(t0), fs(fs), stream_count(streams), sample_count(samples),
          data(streams * samples, 0.0) {}

    double& at(std::size_t stream, std::size_t n) { return data[stream * sample_count + n]; }
    double at(std::size_t stream, std::size_t n) const { return data[stream * sample_count + n]; }
    std::span<double> stream(std::size_t s) {
        return {data.data() + s * sample_count, sample_count};
    }
    std::span<const double> stream(std::size_t s) const {
        return {data.data() + s * sample_count, sample_count};
    }
    double time_at(std::size_t n) const { return t0 + static_cast<double>(n) / fs; }
    double t_last() const { return sample_count == 0 ? t0 : time_at(sample_count - 1); }
};

/// Trailing view over a StreamMatrix: `count` samples ending at the sample
/// nearest `t_end`.
struct Window {
    const StreamMatrix* source = nullptr;
    std::size_t first = 0;
    std::size_t count = 0;
    double t_end = 0.0;

    double fs() const { return source->fs; }
    std::size_t stream_count() const { return source->stream_count; }
    std::span<const double> stream(std::size_t s) const {
        return source->stream(s).subspan(first, count);
    }
};

Window extract_window(const StreamMatrix& m, double t_end, double duration = 30.0);

/// RawTrace snapped to the nominal sampling grid. Records are assigned to the
/// nearest grid slot; empty slots hold the previous sample.
struct NormalizedTrace {
    TechnologyProfile profile;
    double t0 = 0.0;
    std::vector<std::vector<std::complex<double>>> samples;

    std::size_t size() const { return samples.size(); }
};

NormalizedTrace normalize_to_grid(const RawTrace& raw);

/// Real parts of a normalized trace as a StreamMatrix.
StreamMatrix real_matrix(const NormalizedTrace& trace);

}  // namespace rfresp
