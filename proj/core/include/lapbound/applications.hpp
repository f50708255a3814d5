#pragma once

#include <optional>
#include <vector>

#include "lapbound/bounds.hpp"
#include "lapbound/graph.hpp"
#include "lapbound/rational.hpp"

namespace lapbound {

inline constexpr long long kDefaultEnumerationGuard = 10'000'000;

struct CutResult {
    long long value = 0;
    VertexSubset witness;  // one side of a minimum cut
};

/// Spectral upper bound on edge-connectivity:
/// min over 0<m<n of (n-m)·Σ_{i<=m}(λ_i - d_i), degrees descending.
struct EdgeConnectivityBound {
    double value = 0.0;
    int argmin_m = 0;  // lowest m on ties
    std::vector<double> per_m;
};
EdgeConnectivityBound edge_connectivity_bound(const GraphContext& ctx);

/// Exact minimum edge cut via unit-capacity max-flow from vertex 0 to every
/// other sink.  Disconnected graphs yield 0 with the component of 0 as witness.
CutResult exact_edge_connectivity(const Graph& g);

/// Expected cut size of a uniform random m-subset: 2em(n-m)/(n(n-1)), exact.
Rational expected_cut(const Graph& g, int m);
/// Exhaustive average of the cut over all C(n,m) subsets (n <= 20 and subset
/// count under the guard); must equal expected_cut exactly.
Rational expected_cut_exhaustive(const Graph& g, int m,
                                 long long guard = kDefaultEnumerationGuard);

/// Subsets witnessing cut >= and <= the expectation (they always exist).
struct CutWitnesses {
    VertexSubset u_high;
    VertexSubset u_low;
    long long cut_high = 0;
    long long cut_low = 0;
};
CutWitnesses cut_existence(const Graph& g, int m, long long guard = kDefaultEnumerationGuard);

/// The eq5 chain instantiated at the random-cut witnesses; for d-regular
/// graphs also the closed forms m·d·n/(n-1) on both sides.
struct RandomCutBounds {
    BoundReport eq16;
    BoundReport eq17;
    std::optional<BoundReport> eq18_upper;
    std::optional<BoundReport> eq18_lower;
};
RandomCutBounds corollary_random_cuts(const GraphContext& ctx, int m,
                                      long long guard = kDefaultEnumerationGuard);

/// Every vertex outside d has at least k neighbors in d.
bool kdom_verify(const Graph& g, const VertexSubset& d, int k);
/// Σ_{i<=|D|} λ_i >= Σ_{u∈D} d_u + k for a verified k-dominating set.
BoundReport kdom_bound(const GraphContext& ctx, const VertexSubset& d, int k);
/// Greedy max-coverage k-dominating set; requires min degree >= k.
VertexSubset greedy_kdom(const Graph& g, int k);

struct ExactIsoperimetric {
    Rational value{0};
    VertexSubset argmin;  // lexicographically smallest among ties
};
/// Exhaustive isoperimetric number over all U with 0 < |U| <= n/2 (n <= guard).
ExactIsoperimetric isoperimetric_exact(const Graph& g, int order_guard = 24);

/// λ_{n-1}/2 and sqrt(λ_{n-1}(2 d_1 - λ_{n-1})).  degenerate marks instances
/// where the upper formula is not valid (order <= 2, the triangle, or a
/// vanishing radicand) and must not be asserted against the exact value.
struct MoharBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool degenerate = false;
};
MoharBounds mohar_bounds(const GraphContext& ctx);

/// min over ceil(n/2) <= m < n of Σ_{i<=m}(λ_i - d_i), degrees descending.
struct IsoperimetricUpper {
    double value = 0.0;
    int argmin_m = 0;  // lowest m on ties
};
IsoperimetricUpper isoperimetric_upper(const GraphContext& ctx);

/// Combined report: exact value plus both spectral envelopes.
struct IsoperimetricResult {
    Rational value{0};
    VertexSubset argmin;
    double mohar_lower = 0.0;
    double mohar_upper = 0.0;
    bool mohar_degenerate = false;
    double eq21_upper = 0.0;
    int eq21_argmin_m = 0;
};
IsoperimetricResult isoperimetric_report(const GraphContext& ctx, int order_guard = 24);

} // namespace lapbound
