#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isst {

/// Named random-number streams. Every stochastic input of a replication is
/// drawn from its own stream so that changing one input (say, the behaviour
/// rules) cannot perturb the draws of another.
enum class StreamId : std::uint32_t {
    arrivals_general = 0,
    arrivals_advisory = 1,
    arrivals_phone = 2,
    service_reception = 3,
    service_advisor = 4,
    behavior = 5,
};

inline constexpr std::array<StreamId, 6> all_stream_ids = {
    StreamId::arrivals_general,   StreamId::arrivals_advisory,
    StreamId::arrivals_phone,     StreamId::service_reception,
    StreamId::service_advisor,    StreamId::behavior,
};

inline std::string_view stream_label(StreamId id) {
    switch (id) {
        case StreamId::arrivals_general: return "arrivals-general";
        case StreamId::arrivals_advisory: return "arrivals-advisory";
        case StreamId::arrivals_phone: return "arrivals-phone";
        case StreamId::service_reception: return "service-reception";
        case StreamId::service_advisor: return "service-advisor";
        case StreamId::behavior: return "behavior";
    }
    throw std::logic_error("unknown stream id");
}

namespace detail {

// Finalizer of the splitmix64 generator (Steele/Lea/Flood; Vigna's constants).
// Pure 64-bit integer arithmetic, so sequences are identical on every
// platform.
inline constexpr std::uint64_t splitmix_scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Seed derivation used everywhere: the stream state is a pure function of
/// (master_seed, replication_index, stream_id), so the same triple always
/// reproduces the same sample sequence.
inline constexpr std::uint64_t mix_seed(std::uint64_t master_seed,
                                        std::uint64_t replication_index,
                                        std::uint64_t stream_ordinal) {
    std::uint64_t s = detail::splitmix_scramble(master_seed + 0x9E3779B97F4A7C15ull);
    s = detail::splitmix_scramble(s ^ (replication_index + 0xD1B54A32D192ED03ull));
    s = detail::splitmix_scramble(s ^ (stream_ordinal + 0x8CB92BA72F3D8DD7ull));
    return s;
}

/// Convenience two-argument mixer (used to salt a master seed per
/// experiment/mode when common random numbers are off).
inline constexpr std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t salt) {
    return detail::splitmix_scramble(
        detail::splitmix_scramble(master_seed + 0x9E3779B97F4A7C15ull) ^
        (salt + 0xD1B54A32D192ED03ull));
}

/// A deterministic splitmix64 stream.
class RngStream {
public:
    RngStream() : state_(0) {}

    RngStream(std::uint64_t master_seed, std::uint64_t replication_index, StreamId id)
        : state_(mix_seed(master_seed, replication_index,
                          static_cast<std::uint64_t>(id))) {}

    explicit RngStream(std::uint64_t raw_state) : state_(raw_state) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return detail::splitmix_scramble(state_);
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// The six streams of one replication, all derived from the same
/// (master_seed, replication_index) pair.
class StreamSet {
public:
    StreamSet(std::uint64_t master_seed, std::uint64_t replication_index) {
        for (StreamId id : all_stream_ids)
            streams_[static_cast<std::size_t>(id)] =
                RngStream(master_seed, replication_index, id);
    }

    RngStream& operator[](StreamId id) {
        return streams_[static_cast<std::size_t>(id)];
    }

private:
    std::array<RngStream, all_stream_ids.size()> streams_;
};

}  // namespace isst
