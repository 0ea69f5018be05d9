#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace bggl {

/// Seedable, splittable random stream (xoshiro256** core). The pair
/// (seed, stream_id) fully determines the draw sequence; distinct stream ids
/// are decorrelated through a splitmix64 key schedule, so replication r of a
/// study can use stream id r regardless of which thread runs it.
///
/// Satisfies UniformRandomBitGenerator. Single owner; not thread-safe.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal (Marsaglia polar method).
    double normal();
    /// Standard exponential.
    double exponential();

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace bggl
