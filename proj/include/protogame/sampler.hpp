#pragma once

#include <cstdint>
#include <vector>

#include "protogame/model.hpp"

namespace protogame {

/// Artifact-chosen sampling caps; echoed in reports so results are
/// reproducible from the report alone.
struct SamplerBounds {
    long long jitter_denominator = 10000;  // rational grid resolution
    long long span = 4;                    // width used for half-open intervals
    long long box = 8;                     // half-width of the rejection box
    long long budget = 100000;             // total draws per sample
};

/// Deterministic PRNG (splitmix64); value stream is a pure function of the seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    /// uniform in [lo, hi], inclusive
    long long next_in(long long lo, long long hi);

private:
    uint64_t state_;
};

/// Draws `n` ParamSets that exactly satisfy `constraints`. Strategy: order
/// parameters by declaration, turning each single-variable constraint into
/// an interval bound once its other side is determined, and sample the
/// interval on a seeded rational grid; falls back to rejection sampling in a
/// fixed box when the interval structure does not apply. Sample i draws its
/// own generator from seed + i, so results are schedule-independent.
/// Throws SamplerBudgetError when the draw budget is exhausted.
std::vector<ParamSet> sample_params(const std::vector<Constraint> &constraints,
                                    const std::vector<Param> &decls, long long seed, long long n,
                                    const SamplerBounds &bounds = SamplerBounds{});

} // namespace protogame
