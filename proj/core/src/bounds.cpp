#include "lapbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lapbound {

namespace {

constexpr std::string_view kNames[] = {
    "eq2",  "eq3",  "eq4",  "eq5_lower", "eq5_upper", "eq6",  "eq7",  "eq8",  "eq9",
    "eq10", "eq11", "eq12", "eq13",      "eq16",      "eq17", "eq18_lower", "eq18_upper", "eq19",
};

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_subset(const GraphContext& ctx, const VertexSubset& u, bool allow_full) {
    require(!u.empty(), "subset must be nonempty");
    require(u.members.back() < ctx.order(), "subset vertex out of range");
    if (!allow_full) require(u.size() < ctx.order(), "subset must be a proper subset");
}

} // namespace

std::string_view bound_id_name(BoundId id) {
    return kNames[static_cast<int>(id)];
}

std::optional<BoundId> bound_id_from_name(std::string_view name) {
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        if (kNames[i] == name) return static_cast<BoundId>(i);
    return std::nullopt;
}

bool is_lower_bound(BoundId id) {
    switch (id) {
        case BoundId::eq3:
        case BoundId::eq5_lower:
        case BoundId::eq7:
        case BoundId::eq8:
        case BoundId::eq17:
        case BoundId::eq18_lower:
            return false;
        default:
            return true;
    }
}

BoundReport make_bound_report(BoundId id, int m, double lhs, double rhs,
                              std::optional<Rational> rhs_exact,
                              std::optional<VertexSubset> subset, double tol) {
    BoundReport r;
    r.id = id;
    r.m = m;
    r.lhs = lhs;
    r.rhs = rhs;
    r.rhs_exact = std::move(rhs_exact);
    r.slack = is_lower_bound(id) ? lhs - rhs : rhs - lhs;
    r.holds = r.slack >= -tol;
    r.equality = std::abs(r.slack) <= tol;
    r.subset = std::move(subset);
    return r;
}

GraphContext::GraphContext(const Graph& g, std::optional<double> tol_override)
    : graph(g),
      lap(laplacian(g)),
      spectrum(laplacian_spectrum(g)),
      degrees_desc(g.degrees()),
      connected(g.is_connected()) {
    std::sort(degrees_desc.begin(), degrees_desc.end(), std::greater<>());
    tol = tol_override.value_or(comparison_tol(lap));
}

VertexSubset GraphContext::top_degree_subset(int m) const {
    require(m >= 1 && m <= order(), "top_degree_subset: m out of range");
    std::vector<int> idx(static_cast<std::size_t>(order()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int da = graph.degree(a), db = graph.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    idx.resize(static_cast<std::size_t>(m));
    return VertexSubset(std::move(idx));
}

VertexSubset GraphContext::bottom_degree_subset(int m) const {
    require(m >= 1 && m <= order(), "bottom_degree_subset: m out of range");
    std::vector<int> idx(static_cast<std::size_t>(order()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int da = graph.degree(a), db = graph.degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    idx.resize(static_cast<std::size_t>(m));
    return VertexSubset(std::move(idx));
}

long long GraphContext::degree_sum(const VertexSubset& u) const {
    long long s = 0;
    for (int v : u.members) s += graph.degree(v);
    return s;
}

long long GraphContext::top_degree_sum(int m) const {
    long long s = 0;
    for (int i = 0; i < m; ++i) s += degrees_desc[static_cast<std::size_t>(i)];
    return s;
}

long long GraphContext::bottom_degree_sum(int m) const {
    long long s = 0;
    const int n = order();
    for (int i = 0; i < m; ++i) s += degrees_desc[static_cast<std::size_t>(n - 1 - i)];
    return s;
}

BoundReport schur_lower(const GraphContext& ctx, int m) {
    require(m >= 1 && m <= ctx.order(), "eq2: m out of range");
    Rational rhs(ctx.top_degree_sum(m));
    return make_bound_report(BoundId::eq2, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs,
                             std::nullopt, ctx.tol);
}

BoundReport low_degree_upper(const GraphContext& ctx, int m) {
    require(m >= 1 && m <= ctx.order(), "eq3: m out of range");
    Rational rhs(ctx.bottom_degree_sum(m));
    return make_bound_report(BoundId::eq3, m, ctx.spectrum.sum_smallest(m), to_double(rhs), rhs,
                             std::nullopt, ctx.tol);
}

BoundReport grone_lower(const GraphContext& ctx, int m) {
    require(ctx.connected, "eq4: graph must be connected");
    require(m >= 1 && m < ctx.order(), "eq4: requires 1 <= m < n");
    Rational rhs(ctx.top_degree_sum(m) + 1);
    return make_bound_report(BoundId::eq4, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs,
                             std::nullopt, ctx.tol);
}

BasicChain basic_chain(const GraphContext& ctx, const VertexSubset& u) {
    require(ctx.connected, "eq5: graph must be connected");
    check_subset(ctx, u, false);
    const int n = ctx.order();
    const int m = u.size();

    long long cut = edge_boundary_size(ctx.graph, u);
    Rational mid = Rational(ctx.degree_sum(u)) + Rational(cut, n - m);

    QuotientMatrix q = quotient(ctx.lap, pointed_partition(u, n));
    Spectrum mu = eigenvalues_sym(q.sym);
    // The quotient has row sums 0, so its smallest eigenvalue is 0.
    if (std::abs(mu.values.back()) > std::max(ctx.tol, 1e-9 * (1.0 + ctx.lap.frobenius_norm())))
        throw std::runtime_error("eq5: quotient spectrum does not end in 0");

    BasicChain chain;
    chain.mid = mid;
    chain.quotient_spectrum = std::move(mu);
    chain.lower = make_bound_report(BoundId::eq5_lower, m, ctx.spectrum.sum_smallest_excluding_min(m),
                                    to_double(mid), mid, u, ctx.tol);
    chain.upper = make_bound_report(BoundId::eq5_upper, m, ctx.spectrum.sum_largest(m),
                                    to_double(mid), mid, u, ctx.tol);
    return chain;
}

EqualityCertificate certify_equality(const GraphContext& ctx, const VertexSubset& u, Side side) {
    require(ctx.connected, "certify_equality: graph must be connected");
    check_subset(ctx, u, false);
    const int n = ctx.order();
    const int m = u.size();

    EqualityCertificate cert;
    cert.side = side;

    auto mask = ctx.graph.subset_mask(u);
    cert.all_or_none = true;
    for (int v : u.members) {
        int cross = ctx.graph.degree(v) - ctx.graph.neighbors_in(v, mask);
        if (cross != 0 && cross != n - m) {
            cert.all_or_none = false;
            break;
        }
    }

    long long cut = edge_boundary_size(ctx.graph, u);
    cert.b = Rational(cut, n - m);

    InducedSubgraph h = induced_subgraph(ctx.graph, u.complement(n));
    cert.theta = laplacian_spectrum(h.graph);
    cert.complement_disconnected = components(h.graph).size() > 1;

    // Eigenvalue clause.  With m = n-1 no eigenvalue of L comes from the
    // complement block, so the clause is vacuous.
    if (m == n - 1) {
        cert.eigen_condition = true;
    } else if (side == Side::upper) {
        double expect = cert.theta.lambda(1) + to_double(cert.b);
        cert.eigen_condition = std::abs(ctx.spectrum.lambda(m + 1) - expect) <= ctx.tol;
    } else {
        double expect = cert.theta.lambda(n - m - 1) + to_double(cert.b);
        cert.eigen_condition = std::abs(ctx.spectrum.lambda(n - m - 1) - expect) <= ctx.tol;
    }

    cert.certified = cert.all_or_none && cert.eigen_condition;
    return cert;
}

BoundReport top_degree_lower(const GraphContext& ctx, int m) {
    require(ctx.connected, "eq6: graph must be connected");
    require(m >= 1 && m < ctx.order(), "eq6: requires 0 < m < n");
    VertexSubset u = ctx.top_degree_subset(m);
    long long cut = edge_boundary_size(ctx.graph, u);
    Rational rhs = Rational(ctx.top_degree_sum(m)) + Rational(cut, ctx.order() - m);
    return make_bound_report(BoundId::eq6, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs, u,
                             ctx.tol);
}

BoundReport bottom_degree_upper(const GraphContext& ctx, int m) {
    require(ctx.connected, "eq7: graph must be connected");
    require(m >= 1 && m < ctx.order(), "eq7: requires 0 < m < n");
    VertexSubset u = ctx.bottom_degree_subset(m);
    long long cut = edge_boundary_size(ctx.graph, u);
    Rational rhs = Rational(ctx.bottom_degree_sum(m)) + Rational(cut, ctx.order() - m);
    return make_bound_report(BoundId::eq7, m, ctx.spectrum.sum_smallest_excluding_min(m),
                             to_double(rhs), rhs, u, ctx.tol);
}

BoundReport bottom_degree_upper_capped(const GraphContext& ctx, int m) {
    require(ctx.connected, "eq8: graph must be connected");
    const int n = ctx.order();
    require(m >= 1 && m < n, "eq8: requires 0 < m < n");
    VertexSubset u = ctx.bottom_degree_subset(m);
    long long cut = edge_boundary_size(ctx.graph, u);
    Rational ratio(cut, n - m);
    Rational cap(ctx.degrees_desc[static_cast<std::size_t>(n - m - 1)]);  // d_{n-m}, descending
    Rational rhs = Rational(ctx.bottom_degree_sum(m)) + std::min(ratio, cap);
    return make_bound_report(BoundId::eq8, m, ctx.spectrum.sum_smallest_excluding_min(m),
                             to_double(rhs), rhs, u, ctx.tol);
}

BoundReport gen_grone(const GraphContext& ctx, const VertexSubset& u) {
    require(ctx.connected, "eq9: graph must be connected");
    check_subset(ctx, u, false);
    const int m = u.size();
    long long cut = edge_boundary_size(ctx.graph, u);
    long long boundary = vertex_boundary(ctx.graph, u).size();
    if (boundary == 0) throw std::runtime_error("eq9: empty vertex boundary on a connected graph");
    Rational rhs = Rational(ctx.degree_sum(u)) + Rational(cut, boundary);
    return make_bound_report(BoundId::eq9, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs, u,
                             ctx.tol);
}

bool grone_merris_shape_ok(const Graph& g, const VertexSubset& u, int* bad_vertex) {
    auto mask = g.subset_mask(u);
    for (int v : u.members) {
        if (g.neighbors_in(v, mask) >= 2) {
            if (bad_vertex) *bad_vertex = v;
            return false;
        }
    }
    return true;
}

BoundReport grone_merris(const GraphContext& ctx, const VertexSubset& u) {
    require(ctx.connected, "eq10: graph must be connected");
    require(ctx.order() > 2, "eq10: requires n > 2");
    check_subset(ctx, u, false);
    int bad = -1;
    if (!grone_merris_shape_ok(ctx.graph, u, &bad))
        throw std::invalid_argument("eq10: G[U] is not a union of disjoint edges and isolated vertices"
                                    " (vertex " + std::to_string(bad) + " has induced degree >= 2)");
    const int m = u.size();
    auto mask = ctx.graph.subset_mask(u);
    long long inner = 0;
    for (int v : u.members) inner += ctx.graph.neighbors_in(v, mask);
    long long r = inner / 2;
    Rational rhs(ctx.degree_sum(u) + m - r);
    return make_bound_report(BoundId::eq10, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs, u,
                             ctx.tol);
}

BoundReport bh_bound(const GraphContext& ctx, const VertexSubset& u) {
    check_subset(ctx, u, true);
    const int m = u.size();
    const int n = ctx.order();

    auto comps_g = components(ctx.graph);
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < comps_g.size(); ++c)
        for (int v : comps_g[c].members) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    InducedSubgraph gu = induced_subgraph(ctx.graph, u);
    long long h = 0;
    for (const auto& comp : components(gu.graph)) {
        int gc = comp_of[static_cast<std::size_t>(gu.vertex_map[static_cast<std::size_t>(comp.members[0])])];
        bool whole = comp.size() == comps_g[static_cast<std::size_t>(gc)].size();
        if (!whole) ++h;
    }
    Rational rhs(ctx.degree_sum(u) + h);
    return make_bound_report(BoundId::eq11, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs, u,
                             ctx.tol);
}

BoundReport gen_grone_merris(const GraphContext& ctx, const VertexSubset& u) {
    require(ctx.connected, "eq12: graph must be connected");
    require(ctx.order() > 2, "eq12: requires n > 2");
    check_subset(ctx, u, false);
    const int m = u.size();
    auto mask = ctx.graph.subset_mask(u);
    long long inner2 = 0;
    for (int v : u.members) inner2 += ctx.graph.neighbors_in(v, mask);
    Rational rhs(ctx.degree_sum(u) + m - inner2 / 2);
    return make_bound_report(BoundId::eq12, m, ctx.spectrum.sum_largest(m), to_double(rhs), rhs, u,
                             ctx.tol);
}

BoundReport gen_grone_merris2(const GraphContext& ctx, const VertexSubset& u) {
    require(ctx.connected, "eq13: graph must be connected");
    require(ctx.order() > 2, "eq13: requires n > 2");
    check_subset(ctx, u, false);
    const int n = ctx.order();
    const int m = u.size();
    require(m < n - 1, "eq13: requires m < n-1 so the complement is nonempty");

    auto mask = ctx.graph.subset_mask(u);
    long long inner2 = 0;
    for (int v : u.members) inner2 += ctx.graph.neighbors_in(v, mask);

    InducedSubgraph h = induced_subgraph(ctx.graph, u.complement(n));
    double theta1 = laplacian_spectrum(h.graph).lambda(1);

    double rhs = static_cast<double>(ctx.degree_sum(u) + m - inner2 / 2) + theta1;
    return make_bound_report(BoundId::eq13, m, ctx.spectrum.sum_largest(m + 1), rhs, std::nullopt,
                             u, ctx.tol);
}

BoundReport schur_lower(const Graph& g, int m) { return schur_lower(GraphContext(g), m); }
BoundReport low_degree_upper(const Graph& g, int m) { return low_degree_upper(GraphContext(g), m); }
BoundReport grone_lower(const Graph& g, int m) { return grone_lower(GraphContext(g), m); }
BasicChain basic_chain(const Graph& g, const VertexSubset& u) { return basic_chain(GraphContext(g), u); }
EqualityCertificate certify_equality(const Graph& g, const VertexSubset& u, Side side) {
    return certify_equality(GraphContext(g), u, side);
}
BoundReport top_degree_lower(const Graph& g, int m) { return top_degree_lower(GraphContext(g), m); }
BoundReport bottom_degree_upper(const Graph& g, int m) { return bottom_degree_upper(GraphContext(g), m); }
BoundReport bottom_degree_upper_capped(const Graph& g, int m) {
    return bottom_degree_upper_capped(GraphContext(g), m);
}
BoundReport gen_grone(const Graph& g, const VertexSubset& u) { return gen_grone(GraphContext(g), u); }
BoundReport grone_merris(const Graph& g, const VertexSubset& u) { return grone_merris(GraphContext(g), u); }
BoundReport bh_bound(const Graph& g, const VertexSubset& u) { return bh_bound(GraphContext(g), u); }
BoundReport gen_grone_merris(const Graph& g, const VertexSubset& u) {
    return gen_grone_merris(GraphContext(g), u);
}
BoundReport gen_grone_merris2(const Graph& g, const VertexSubset& u) {
    return gen_grone_merris2(GraphContext(g), u);
}

} // namespace lapbound
