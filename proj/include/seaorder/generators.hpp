#pragma once

// Seeded samplers for streams, permutations and strong-equity pairs/chains.
// Uses only mt19937_64 output (no std distributions) so draws are identical
// across standard library implementations.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "seaorder/streams.hpp"

namespace seaorder {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound ≥ 1.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

struct StreamShape {
    std::size_t max_preperiod = 4;
    std::size_t max_period = 6;
};

UtilityStream random_stream(Rng& rng, Alphabet alphabet, StreamShape shape = {});

// Random changes at coordinates below `window`; the result is tail-equal to x.
UtilityStream random_modification(Rng& rng, const UtilityStream& x, Index window, std::size_t changes);

// Support drawn from [0, range), at most max_support moved points.
FiniteSupportPermutation random_permutation(Rng& rng, std::size_t max_support, Index range);

struct NestedShape {
    std::size_t max_exceptionals = 4;
    StreamShape coordinate{};
};

NestedStream random_nested(Rng& rng, const std::vector<UtilityStream>& tail_pool, NestedShape shape = {});

// (x, y) with x SE y, built from x by compressing two coordinates below
// `window`. Needs alphabet size ≥ 4.
std::pair<UtilityStream, UtilityStream> random_se_pair(Rng& rng, const UtilityStream& base, Index window);

// One SE step from x at a random admissible coordinate pair, if one is found.
std::optional<UtilityStream> random_se_step(Rng& rng, const UtilityStream& x, Index window);
std::optional<NestedStream> random_se_step(Rng& rng, const NestedStream& x, Index window);

std::optional<std::pair<NestedStream, NestedStream>> random_se_pair(Rng& rng, const NestedStream& base, Index window);

}  // namespace seaorder
