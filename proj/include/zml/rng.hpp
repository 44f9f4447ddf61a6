#pragma once
// Counter-based RNG plumbing.  Identical (seed, stream, index) must reproduce
// identical draws on any worker schedule, so every Monte Carlo sample derives
// its own PRNG state instead of sharing a sequential stream.

#include <cstdint>
#include <random>

#include "zml/common.hpp"

namespace zml {

struct RngSeed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

// Engine seeded from (seed, index); a sample's draws never depend on how many
// samples ran before it.
inline std::mt19937_64 engine_for(const RngSeed& seed, std::uint64_t index) {
    std::uint64_t s = mix64(seed.master ^ mix64(seed.stream ^ mix64(index)));
    return std::mt19937_64(s);
}

}  // namespace zml
