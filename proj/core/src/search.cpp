#include "lapbound/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace lapbound {

namespace {

long long binomial_capped(int n, int m, long long cap) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    long long r = 1;
    for (int i = 1; i <= m; ++i) {
        r = r * (n - m + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

bool next_combination(std::vector<int>& s, int n) {
    const int m = static_cast<int>(s.size());
    int i = 0;
    while (i + 1 < m && s[static_cast<std::size_t>(i)] + 1 == s[static_cast<std::size_t>(i + 1)]) ++i;
    if (s[static_cast<std::size_t>(i)] + 1 >= n && i + 1 >= m) return false;
    ++s[static_cast<std::size_t>(i)];
    if (s[static_cast<std::size_t>(i)] >= n) return false;
    for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j;
    return true;
}

std::optional<BoundReport> evaluate(const GraphContext& ctx, BoundId id, const VertexSubset& u) {
    switch (id) {
        case BoundId::eq5_lower:
            return basic_chain(ctx, u).lower;
        case BoundId::eq5_upper:
            return basic_chain(ctx, u).upper;
        case BoundId::eq9:
            return gen_grone(ctx, u);
        case BoundId::eq10:
            if (!grone_merris_shape_ok(ctx.graph, u)) return std::nullopt;
            return grone_merris(ctx, u);
        case BoundId::eq11:
            return bh_bound(ctx, u);
        case BoundId::eq12:
            return gen_grone_merris(ctx, u);
        case BoundId::eq13:
            return gen_grone_merris2(ctx, u);
        default:
            throw std::invalid_argument("best_subset: bound does not take a free subset");
    }
}

// "Better" in the bound's favorable direction; ties prefer the lex-smaller subset.
bool better(const BoundReport& cand, const BoundReport& best) {
    bool maximize = is_lower_bound(cand.id);
    if (cand.rhs_exact && best.rhs_exact) {
        if (*cand.rhs_exact != *best.rhs_exact)
            return maximize ? *cand.rhs_exact > *best.rhs_exact : *cand.rhs_exact < *best.rhs_exact;
    } else if (cand.rhs != best.rhs) {
        return maximize ? cand.rhs > best.rhs : cand.rhs < best.rhs;
    }
    return lex_less(*cand.subset, *best.subset);
}

} // namespace

bool bound_takes_free_subset(BoundId id) {
    switch (id) {
        case BoundId::eq5_lower:
        case BoundId::eq5_upper:
        case BoundId::eq9:
        case BoundId::eq10:
        case BoundId::eq11:
        case BoundId::eq12:
        case BoundId::eq13:
            return true;
        default:
            return false;
    }
}

VertexSubset random_subset(SplitMix64& rng, int n, int m) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (int j = 0; j < m; ++j) {
        int k = j + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - j)));
        std::swap(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(k)]);
    }
    idx.resize(static_cast<std::size_t>(m));
    return VertexSubset(std::move(idx));
}

SearchResult best_subset(const GraphContext& ctx, BoundId id, int m, const Strategy& strategy) {
    const int n = ctx.order();
    if (m < 1 || m >= n) throw std::invalid_argument("best_subset: requires 0 < m < n");

    // Degree-ranked ids: the subset is part of the bound's definition.
    if (id == BoundId::eq6 || id == BoundId::eq7 || id == BoundId::eq8) {
        bool want_top = id == BoundId::eq6;
        if (want_top && strategy.kind != StrategyKind::top_degree)
            throw std::invalid_argument("best_subset: eq6 fixes its subset; use the top_degree strategy");
        if (!want_top && strategy.kind != StrategyKind::bottom_degree)
            throw std::invalid_argument("best_subset: eq7/eq8 fix their subsets; use the bottom_degree strategy");
        BoundReport rep = (id == BoundId::eq6)   ? top_degree_lower(ctx, m)
                          : (id == BoundId::eq7) ? bottom_degree_upper(ctx, m)
                                                 : bottom_degree_upper_capped(ctx, m);
        return {*rep.subset, rep, 1, 0};
    }

    if (!bound_takes_free_subset(id))
        throw std::invalid_argument("best_subset: bound does not take a free subset");

    SearchResult res;
    bool have_best = false;
    auto consider = [&](const VertexSubset& u) {
        auto rep = evaluate(ctx, id, u);
        if (!rep) {
            ++res.candidates_skipped;
            return;
        }
        ++res.candidates_evaluated;
        if (!have_best || better(*rep, res.report)) {
            res.report = std::move(*rep);
            res.subset = u;
            have_best = true;
        }
    };

    switch (strategy.kind) {
        case StrategyKind::top_degree:
            consider(ctx.top_degree_subset(m));
            break;
        case StrategyKind::bottom_degree:
            consider(ctx.bottom_degree_subset(m));
            break;
        case StrategyKind::exhaustive: {
            long long count = binomial_capped(n, m, strategy.guard_limit);
            if (count > strategy.guard_limit && !strategy.override_guard)
                throw std::invalid_argument("best_subset: subset count exceeds the exhaustive guard");
            std::vector<int> s(static_cast<std::size_t>(m));
            std::iota(s.begin(), s.end(), 0);
            do {
                VertexSubset u;
                u.members = s;
                consider(u);
            } while (next_combination(s, n));
            break;
        }
        case StrategyKind::random_sample: {
            if (strategy.sample_count < 1)
                throw std::invalid_argument("best_subset: random_sample needs sample_count >= 1");
            SplitMix64 rng(strategy.seed);
            for (long long i = 0; i < strategy.sample_count; ++i) consider(random_subset(rng, n, m));
            break;
        }
    }
    if (!have_best)
        throw std::invalid_argument("best_subset: no candidate subset satisfied the bound's shape");
    return res;
}

} // namespace lapbound
