#pragma once

#include <cstdint>

namespace sops {

// splitmix64 step; used to derive independent sub-stream seeds from one root
// seed, keyed by experiment and repetition indices.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t root, uint64_t experiment, uint64_t repetition) {
    return mix64(mix64(root ^ 0x517cc1b727220a95ULL * experiment) + repetition);
}

}  // namespace sops
