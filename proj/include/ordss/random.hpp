#pragma once

#include <cstdint>

#include "ordss/linalg.hpp"

namespace ordss {

// splitmix64: tiny, portable, and fully determined by the seed. Used for all
// generated data so traces match across platforms and runs.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-enough residue for desk-scale moduli.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// Length-m data row vector over GF(q) with entries next() % q in order.
FpRowVector random_data_vector(FieldOrder q, Index m, std::uint64_t seed);

// Random m x cols matrix over GF(q), drawn entry by entry in row-major order.
FpMatrix random_matrix(FieldOrder q, Index rows, Index cols, SplitMix64& rng);

}  // namespace ordss
