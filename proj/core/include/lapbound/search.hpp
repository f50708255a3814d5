#pragma once

#include <cstdint>
#include <vector>

#include "lapbound/bounds.hpp"
#include "lapbound/rng.hpp"

namespace lapbound {

enum class StrategyKind { top_degree, bottom_degree, exhaustive, random_sample };

struct Strategy {
    StrategyKind kind = StrategyKind::exhaustive;
    long long sample_count = 0;   // random_sample only
    std::uint64_t seed = 0;       // random_sample only
    bool override_guard = false;  // allow exhaustive enumeration past the guard
    long long guard_limit = 10'000'000;
};

/// Subset ids whose right-hand side depends on a freely chosen U.
bool bound_takes_free_subset(BoundId id);

struct SearchResult {
    VertexSubset subset;
    BoundReport report;
    long long candidates_evaluated = 0;
    long long candidates_skipped = 0;  // shape-constrained ids skip invalid subsets
};

/// Optimizes the bound's right-hand side over size-m subsets: maximized for
/// lower bounds, minimized for upper bounds.  Candidate enumeration is
/// colexicographic; value ties keep the lexicographically smallest subset.
/// eq6/eq7/eq8 fix their subsets by degree rank and accept only the matching
/// top/bottom strategy.
SearchResult best_subset(const GraphContext& ctx, BoundId id, int m, const Strategy& strategy);

/// Uniform random m-subset of [0,n) from a partial Fisher-Yates shuffle.
VertexSubset random_subset(SplitMix64& rng, int n, int m);

} // namespace lapbound
