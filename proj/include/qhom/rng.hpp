#pragma once

#include <cstdint>

namespace qhom {

// splitmix64: deterministic across platforms, which the report contract needs.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

constexpr std::uint64_t kDefaultSeed = 20240501;
constexpr int kDefaultTrials = 64;
constexpr std::size_t kDefaultCap = 32;

}  // namespace qhom
