#include "cattaneo/rng.hpp"

#include <cmath>
#include <random>

namespace cattaneo {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Generator::Generator(const RngStream& stream) {
    std::uint64_t h = stream.master_seed;
    std::uint64_t key = splitmix64(h);
    h = key ^ stream.stream_id;
    key = splitmix64(h);
    h = key ^ (stream.stage * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL);
    for (auto& word : s_) word = splitmix64(h);
}

Generator::result_type Generator::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Generator::uniform01() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double Generator::exponential() { return -std::log(uniform01()); }

double Generator::normal() {
    std::normal_distribution<double> dist;
    return dist(*this);
}

}  // namespace cattaneo
