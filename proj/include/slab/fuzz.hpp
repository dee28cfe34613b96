#pragma once

#include <cstdint>
#include <random>

#include "slab/hom.hpp"

namespace slab {

struct FuzzBounds {
    std::size_t max_blocks = 4;
    std::size_t max_except = 8;
    Index max_stride = 3;
    Index max_const = 5;
};

// Deterministic generator; draws use plain modular reduction so output does
// not depend on the standard library's distribution implementations.
class Fuzzer {
public:
    using Bounds = FuzzBounds;

    explicit Fuzzer(std::uint64_t seed, Bounds b = Bounds()) : rng_(seed), bounds_(b) {}
    Fuzzer(std::uint64_t seed, std::size_t max_blocks) : rng_(seed) { bounds_.max_blocks = max_blocks; }

    Shape shape();
    ExtPoint real_point(const Shape& s);
    GenMap real_map(const Shape& src, const Shape& dst);
    GenMap real_map();  // random shapes, sometimes a self-map near the identity
    Elem elem(const Shape& s, bool ideal_only = false);
    RepIdeal ideal(const Shape& s);
    // Spectral carrier of a homomorphism whose covering condition fails.
    GenMap non_zlba_map(const Shape& src, const Shape& dst);
    GenMap non_perfect_map();

    Index below(Index n) { return n <= 1 ? 0 : static_cast<Index>(rng_() % static_cast<std::uint64_t>(n)); }
    bool coin(int num = 1, int den = 2) { return below(den) < num; }

private:
    std::mt19937_64 rng_;
    Bounds bounds_;
};

}  // namespace slab
