#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lapbound/graph.hpp"
#include "lapbound/rational.hpp"
#include "lapbound/spectra.hpp"

namespace lapbound {

// Identifiers of the evaluated inequalities.  eq2..eq13 are the core bounds;
// eq16..eq19 come from the applications layer (random-cut and k-domination).
enum class BoundId {
    eq2,
    eq3,
    eq4,
    eq5_lower,
    eq5_upper,
    eq6,
    eq7,
    eq8,
    eq9,
    eq10,
    eq11,
    eq12,
    eq13,
    eq16,
    eq17,
    eq18_lower,
    eq18_upper,
    eq19,
};

std::string_view bound_id_name(BoundId id);
std::optional<BoundId> bound_id_from_name(std::string_view name);
/// true: the inequality reads lhs >= rhs; false: lhs <= rhs.
bool is_lower_bound(BoundId id);

/// One evaluated inequality.  slack >= 0 means it holds exactly; holds and
/// equality are derived from slack against the comparison tolerance.
struct BoundReport {
    BoundId id{};
    int m = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<Rational> rhs_exact;
    double slack = 0.0;
    bool holds = false;
    bool equality = false;
    std::optional<VertexSubset> subset;
};

BoundReport make_bound_report(BoundId id, int m, double lhs, double rhs,
                              std::optional<Rational> rhs_exact,
                              std::optional<VertexSubset> subset, double tol);

/// Per-graph state shared by all bound evaluations: Laplacian, its spectrum,
/// sorted degrees, connectivity, comparison tolerance.
struct GraphContext {
    Graph graph;
    SymmetricMatrix lap;
    Spectrum spectrum;
    std::vector<int> degrees_desc;
    bool connected = false;
    double tol = 0.0;

    explicit GraphContext(const Graph& g, std::optional<double> tol_override = std::nullopt);

    int order() const { return graph.order(); }
    /// m highest-degree vertices; degree ties prefer the lower index.
    VertexSubset top_degree_subset(int m) const;
    /// m lowest-degree vertices; degree ties prefer the higher index.
    VertexSubset bottom_degree_subset(int m) const;
    long long degree_sum(const VertexSubset& u) const;
    long long top_degree_sum(int m) const;
    long long bottom_degree_sum(int m) const;
};

/// Σ_{i<=m} λ_i >= sum of the m largest degrees.
BoundReport schur_lower(const GraphContext& ctx, int m);  // eq2
/// Sum of the m smallest eigenvalues <= sum of the m smallest degrees.
BoundReport low_degree_upper(const GraphContext& ctx, int m);  // eq3
/// Σ_{i<=m} λ_i >= (m largest degrees) + 1 on connected graphs, m < n.
BoundReport grone_lower(const GraphContext& ctx, int m);  // eq4

/// Two-sided chain through the quotient of the partition {u1},...,{um},Ū:
/// Σ λ_{n-i} <= Σ_{u∈U} d_u + cut/(n-m) <= Σ λ_i.
struct BasicChain {
    BoundReport lower;  // eq5_lower
    BoundReport upper;  // eq5_upper
    Rational mid{0};
    Spectrum quotient_spectrum;
};
BasicChain basic_chain(const GraphContext& ctx, const VertexSubset& u);

enum class Side { lower, upper };

/// Equality certificate for one side of the eq5 chain: the all-or-none
/// adjacency clause plus the eigenvalue matching clause.
struct EqualityCertificate {
    Side side{};
    bool all_or_none = false;
    bool eigen_condition = false;
    Rational b{0};
    Spectrum theta;  // Laplacian spectrum of G[Ū]
    bool complement_disconnected = false;
    bool certified = false;
};
EqualityCertificate certify_equality(const GraphContext& ctx, const VertexSubset& u, Side side);

/// eq5_upper at the m highest-degree vertices.
BoundReport top_degree_lower(const GraphContext& ctx, int m);  // eq6
/// eq5_lower at the m lowest-degree vertices.
BoundReport bottom_degree_upper(const GraphContext& ctx, int m);  // eq7
/// eq7 with the cut ratio capped by d_{n-m}.
BoundReport bottom_degree_upper_capped(const GraphContext& ctx, int m);  // eq8
/// Σ λ_i >= Σ_{u∈U} d_u + cut/|∂U| (vertex boundary in the denominator).
BoundReport gen_grone(const GraphContext& ctx, const VertexSubset& u);  // eq9

/// True when G[U] is a disjoint union of edges and isolated vertices; on
/// failure *bad_vertex (if given) names a vertex of induced degree >= 2.
bool grone_merris_shape_ok(const Graph& g, const VertexSubset& u, int* bad_vertex = nullptr);
/// Σ λ_i >= Σ d_u + m - r where G[U] is r disjoint edges plus isolated vertices.
BoundReport grone_merris(const GraphContext& ctx, const VertexSubset& u);  // eq10
/// Σ λ_i >= Σ d_u + h, h = components of G[U] that are not components of G.
BoundReport bh_bound(const GraphContext& ctx, const VertexSubset& u);  // eq11
/// Σ λ_i >= Σ d_u + m - |E[U]|.
BoundReport gen_grone_merris(const GraphContext& ctx, const VertexSubset& u);  // eq12
/// Σ_{i<=m+1} λ_i >= Σ d_u + m - |E[U]| + ϑ_1(G[Ū]).
BoundReport gen_grone_merris2(const GraphContext& ctx, const VertexSubset& u);  // eq13

// Convenience overloads constructing the context on the fly.
BoundReport schur_lower(const Graph& g, int m);
BoundReport low_degree_upper(const Graph& g, int m);
BoundReport grone_lower(const Graph& g, int m);
BasicChain basic_chain(const Graph& g, const VertexSubset& u);
EqualityCertificate certify_equality(const Graph& g, const VertexSubset& u, Side side);
BoundReport top_degree_lower(const Graph& g, int m);
BoundReport bottom_degree_upper(const Graph& g, int m);
BoundReport bottom_degree_upper_capped(const Graph& g, int m);
BoundReport gen_grone(const Graph& g, const VertexSubset& u);
BoundReport grone_merris(const Graph& g, const VertexSubset& u);
BoundReport bh_bound(const Graph& g, const VertexSubset& u);
BoundReport gen_grone_merris(const Graph& g, const VertexSubset& u);
BoundReport gen_grone_merris2(const Graph& g, const VertexSubset& u);

} // namespace lapbound
