#pragma once

#include <cstdint>
#include <random>

namespace unclab {

// All randomness flows through explicit mt19937_64 streams. Parallel loops
// derive one stream per work item from (seed, domain, index), so results are
// independent of thread count and iteration order.
using RngStream = std::mt19937_64;

// Tags separating the independent stream families used across the project.
enum class StreamDomain : std::uint64_t {
    experiment = 1,
    bootstrap = 2,
    projective_audit = 3,
    indirect_audit = 4,
    robertson_audit = 5,
    consistency_audit = 6,
    scratch = 99,
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline RngStream derive_stream(std::uint64_t seed, StreamDomain domain, std::uint64_t index = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(domain));
    h = mix64(h ^ index);
    return RngStream(h);
}

}  // namespace unclab
