#include "rfresp/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace rfresp {

std::string to_string(Technology tech) {
    switch (tech) {
        case Technology::cir: return "cir";
        case Technology::csi: return "csi";
        case Technology::rss: return "rss";
        case Technology::sub: return "sub";
        case Technology::poly: return "poly";
    }
    throw std::invalid_argument("unknown technology");
}

std::string to_string(ValueKind kind) {
    switch (kind) {
        case ValueKind::complex_value: return "complex";
        case ValueKind::real_value: return "real";
        case ValueKind::integer_value: return "integer";
    }
    throw std::invalid_argument("unknown value kind");
}

Technology technology_from_string(const std::string& name) {
    if (name == "cir") return Technology::cir;
    if (name == "csi") return Technology::csi;
    if (name == "rss") return Technology::rss;
    if (name == "sub") return Technology::sub;
    if (name == "poly") return Technology::poly;
    throw std::invalid_argument("unknown technology '" + name + "'");
}

ValueKind value_kind_from_string(const std::string& name) {
    if (name == "complex") return ValueKind::complex_value;
    if (name == "real") return ValueKind::real_value;
    if (name == "integer") return ValueKind::integer_value;
    throw std::invalid_argument("unknown value kind '" + name + "'");
}

TechnologyProfile canonical_profile(Technology tech) {
    switch (tech) {
        case Technology::cir: return {tech, 18.9, 20, ValueKind::complex_value};
        case Technology::csi: return {tech, 9.9, 456, ValueKind::complex_value};
        case Technology::rss: return {tech, 4.5, 32, ValueKind::integer_value};
        case Technology::sub: return {tech, 487.5, 1, ValueKind::real_value};
        case Technology::poly: return {tech, 25.0, 4, ValueKind::real_value};
    }
    throw std::invalid_argument("unknown technology");
}

void RawTrace::validate() const {
    if (profile.fs_nominal <= 0.0) throw std::invalid_argument("fs_nominal must be positive");
    if (profile.stream_count == 0) throw std::invalid_argument("stream_count must be >= 1");
    if (timestamps.size() != samples.size())
        throw std::invalid_argument("timestamp/sample count mismatch");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].size() != profile.stream_count)
            throw std::invalid_argument("sample vector length != stream_count at record " +
                                        std::to_string(i));
        if (i > 0 && timestamps[i] < timestamps[i - 1])
            throw std::invalid_argument("timestamps decrease at record " + std::to_string(i));
    }
}

Window extract_window(const StreamMatrix& m, double t_end, double duration) {
    if (duration <= 0.0) throw std::invalid_argument("window duration must be positive");
    const auto count = static_cast<std::size_t>(std::lround(duration * m.fs));
    const long end_idx = std::lround((t_end - m.t0) * m.fs);
    if (end_idx < 0 || static_cast<std::size_t>(end_idx) >= m.sample_count)
        throw std::out_of_range("window end outside the matrix time span");
    if (count == 0 || static_cast<std::size_t>(end_idx) + 1 < count)
        throw std::out_of_range("window start before the matrix time span");
    Window w;
    w.source = &m;
    w.count = count;
    w.first = static_cast<std::size_t>(end_idx) + 1 - count;
    w.t_end = m.time_at(static_cast<std::size_t>(end_idx));
    return w;
}

NormalizedTrace normalize_to_grid(const RawTrace& raw) {
    raw.validate();
    if (raw.timestamps.empty()) return {raw.profile, 0.0, {}};

    const double fs = raw.profile.fs_nominal;
    const double t0 = raw.timestamps.front();
    const long last_slot = std::lround((raw.timestamps.back() - t0) * fs);
    const auto n_slots = static_cast<std::size_t>(last_slot) + 1;

    NormalizedTrace out;
    out.profile = raw.profile;
    out.t0 = t0;
    out.samples.resize(n_slots);
    std::vector<double> slot_error(n_slots, -1.0);  // |t_record - t_slot|, -1 = empty

    for (std::size_t i = 0; i < raw.size(); ++i) {
        long slot = std::lround((raw.timestamps[i] - t0) * fs);
        if (slot < 0) slot = 0;
        if (slot > last_slot) slot = last_slot;
        const auto k = static_cast<std::size_t>(slot);
        const double err = std::abs(raw.timestamps[i] - (t0 + static_cast<double>(k) / fs));
        // nearest record wins a contested slot; ties go to the later record
        if (slot_error[k] < 0.0 || err <= slot_error[k]) {
            out.samples[k] = raw.samples[i];
            slot_error[k] = err;
        }
    }
    for (std::size_t k = 1; k < n_slots; ++k) {
        if (slot_error[k] < 0.0) out.samples[k] = out.samples[k - 1];
    }
    return out;
}

StreamMatrix real_matrix(const NormalizedTrace& trace) {
    StreamMatrix m(trace.t0, trace.profile.fs_nominal, trace.profile.stream_count, trace.size());
    for (std::size_t n = 0; n < trace.size(); ++n)
        for (std::size_t s = 0; s < trace.profile.stream_count; ++s)
            m.at(s, n) = trace.samples[n][s].real();
    return m;
}

}  // namespace rfresp
