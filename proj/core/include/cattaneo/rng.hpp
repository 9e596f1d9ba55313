#pragma once

#include <cstdint>
#include <limits>

namespace cattaneo {

/// Identifies an independent random stream. Equal triples reproduce the same
/// sequence bit for bit; distinct triples are decorrelated by hashing.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
    std::uint64_t stage = 0;

    RngStream substream(std::uint64_t s) const { return {master_seed, stream_id, s}; }
    friend bool operator==(const RngStream&, const RngStream&) = default;
};

/// xoshiro256** seeded from an RngStream through splitmix64. Satisfies
/// UniformRandomBitGenerator, so std distributions accept it.
class Generator {
public:
    using result_type = std::uint64_t;

    explicit Generator(const RngStream& stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    /// Uniform on the open interval (0, 1).
    double uniform01();
    /// Exp(1).
    double exponential();
    /// Standard normal.
    double normal();

private:
    std::uint64_t s_[4];
};

}  // namespace cattaneo
