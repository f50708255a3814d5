#include "lapbound/applications.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace lapbound {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

long long binomial_capped(int n, int m, long long cap) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    long long r = 1;
    for (int i = 1; i <= m; ++i) {
        r = r * (n - m + i) / i;  // exact: product of i consecutive ints divisible by i!
        if (r > cap) return cap + 1;
    }
    return r;
}

// Colex enumeration of m-subsets of [0,n).  Returns false when exhausted.
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

long long cut_of_members(const Graph& g, const std::vector<int>& members) {
    VertexSubset u;
    u.members = members;
    return edge_boundary_size(g, u);
}

} // namespace

EdgeConnectivityBound edge_connectivity_bound(const GraphContext& ctx) {
    require(ctx.connected, "edge connectivity bound: graph must be connected");
    const int n = ctx.order();
    require(n >= 2, "edge connectivity bound: requires n >= 2");

    EdgeConnectivityBound out;
    out.per_m.reserve(static_cast<std::size_t>(n - 1));
    double best = std::numeric_limits<double>::infinity();
    int best_m = 1;
    double eig_part = 0.0;
    long long deg_part = 0;
    for (int m = 1; m < n; ++m) {
        eig_part += ctx.spectrum.lambda(m);
        deg_part += ctx.degrees_desc[static_cast<std::size_t>(m - 1)];
        double v = static_cast<double>(n - m) * (eig_part - static_cast<double>(deg_part));
        out.per_m.push_back(v);
        if (v < best) {
            best = v;
            best_m = m;
        }
    }
    out.value = best;
    out.argmin_m = best_m;
    return out;
}

namespace {

// Unit-capacity max-flow (BFS augmenting paths); good enough for desk scale.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(const Graph& g) : adj(static_cast<std::size_t>(g.order())) {
        for (auto [a, b] : g.edges()) {
            add(a, b);
            add(b, a);
        }
    }
    void add(int from, int to) {
        adj[static_cast<std::size_t>(from)].push_back({to, 1, static_cast<int>(adj[static_cast<std::size_t>(to)].size())});
        adj[static_cast<std::size_t>(to)].push_back({from, 0, static_cast<int>(adj[static_cast<std::size_t>(from)].size()) - 1});
    }
    long long max_flow(int s, int t) {
        long long flow = 0;
        const int n = static_cast<int>(adj.size());
        while (true) {
            std::vector<std::pair<int, int>> pred(static_cast<std::size_t>(n), {-1, -1});
            std::queue<int> q;
            q.push(s);
            pred[static_cast<std::size_t>(s)] = {s, -1};
            while (!q.empty() && pred[static_cast<std::size_t>(t)].first < 0) {
                int v = q.front();
                q.pop();
                for (std::size_t k = 0; k < adj[static_cast<std::size_t>(v)].size(); ++k) {
                    const auto& a = adj[static_cast<std::size_t>(v)][k];
                    if (a.cap > 0 && pred[static_cast<std::size_t>(a.to)].first < 0) {
                        pred[static_cast<std::size_t>(a.to)] = {v, static_cast<int>(k)};
                        q.push(a.to);
                    }
                }
            }
            if (pred[static_cast<std::size_t>(t)].first < 0) break;
            for (int v = t; v != s;) {
                auto [pv, pk] = pred[static_cast<std::size_t>(v)];
                auto& a = adj[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pk)];
                a.cap -= 1;
                adj[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
                v = pv;
            }
            ++flow;
        }
        return flow;
    }
    VertexSubset source_side(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : adj[static_cast<std::size_t>(v)])
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    q.push(a.to);
                }
        }
        VertexSubset out;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (seen[v]) out.members.push_back(static_cast<int>(v));
        return out;
    }
};

} // namespace

CutResult exact_edge_connectivity(const Graph& g) {
    const int n = g.order();
    require(n >= 2, "exact edge connectivity: requires n >= 2");
    if (!g.is_connected()) return {0, components(g)[0]};

    long long best = std::numeric_limits<long long>::max();
    int best_t = -1;
    for (int t = 1; t < n; ++t) {
        FlowNetwork net(g);
        long long f = net.max_flow(0, t);
        if (f < best) {
            best = f;
            best_t = t;
        }
    }
    FlowNetwork net(g);
    net.max_flow(0, best_t);
    return {best, net.source_side(0)};
}

Rational expected_cut(const Graph& g, int m) {
    const int n = g.order();
    require(m >= 1 && m < n, "expected cut: requires 0 < m < n");
    return Rational(2 * g.edge_count() * m * (n - m), static_cast<long long>(n) * (n - 1));
}

Rational expected_cut_exhaustive(const Graph& g, int m, long long guard) {
    const int n = g.order();
    require(m >= 1 && m < n, "expected cut: requires 0 < m < n");
    require(n <= 20, "expected cut: exhaustive verification capped at n <= 20");
    long long count = binomial_capped(n, m, guard);
    if (count > guard) throw std::invalid_argument("expected cut: subset count exceeds the guard");

    std::vector<int> s(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = i;
    long long total = 0;
    long long subsets = 0;
    do {
        total += cut_of_members(g, s);
        ++subsets;
    } while (next_combination(s, n));
    return Rational(total, subsets);
}

CutWitnesses cut_existence(const Graph& g, int m, long long guard) {
    const int n = g.order();
    require(m >= 1 && m < n, "cut witnesses: requires 0 < m < n");
    long long count = binomial_capped(n, m, guard);
    if (count > guard) throw std::invalid_argument("cut witnesses: subset count exceeds the guard");

    std::vector<int> s(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = i;
    CutWitnesses w;
    bool first = true;
    do {
        long long cut = cut_of_members(g, s);
        VertexSubset u;
        u.members = s;
        if (first || cut > w.cut_high || (cut == w.cut_high && lex_less(u, w.u_high))) {
            w.cut_high = cut;
            w.u_high = u;
        }
        if (first || cut < w.cut_low || (cut == w.cut_low && lex_less(u, w.u_low))) {
            w.cut_low = cut;
            w.u_low = u;
        }
        first = false;
    } while (next_combination(s, n));
    return w;
}

RandomCutBounds corollary_random_cuts(const GraphContext& ctx, int m, long long guard) {
    require(ctx.connected, "random cut bounds: graph must be connected");
    const int n = ctx.order();
    require(m >= 1 && m < n, "random cut bounds: requires 0 < m < n");

    CutWitnesses w = cut_existence(ctx.graph, m, guard);
    Rational shift(2 * ctx.graph.edge_count() * m, static_cast<long long>(n) * (n - 1));

    RandomCutBounds out;
    Rational rhs16 = Rational(ctx.degree_sum(w.u_high)) + shift;
    out.eq16 = make_bound_report(BoundId::eq16, m, ctx.spectrum.sum_largest(m), to_double(rhs16),
                                 rhs16, w.u_high, ctx.tol);
    Rational rhs17 = Rational(ctx.degree_sum(w.u_low)) + shift;
    out.eq17 = make_bound_report(BoundId::eq17, m, ctx.spectrum.sum_smallest_excluding_min(m),
                                 to_double(rhs17), rhs17, w.u_low, ctx.tol);

    int d = ctx.graph.degree(0);
    bool regular = std::all_of(ctx.graph.degrees().begin(), ctx.graph.degrees().end(),
                               [d](int x) { return x == d; });
    if (regular) {
        Rational rhs(static_cast<long long>(m) * d * n, n - 1);
        out.eq18_upper = make_bound_report(BoundId::eq18_upper, m, ctx.spectrum.sum_largest(m),
                                           to_double(rhs), rhs, std::nullopt, ctx.tol);
        out.eq18_lower = make_bound_report(BoundId::eq18_lower, m,
                                           ctx.spectrum.sum_smallest_excluding_min(m), to_double(rhs),
                                           rhs, std::nullopt, ctx.tol);
    }
    return out;
}

bool kdom_verify(const Graph& g, const VertexSubset& d, int k) {
    require(k >= 1, "k-domination: k must be >= 1");
    auto mask = g.subset_mask(d);
    for (int v : d.complement(g.order()).members)
        if (g.neighbors_in(v, mask) < k) return false;
    return true;
}

BoundReport kdom_bound(const GraphContext& ctx, const VertexSubset& d, int k) {
    require(k >= 1, "k-domination: k must be >= 1");
    require(!d.empty() && d.size() < ctx.order(), "k-domination: requires 0 < |D| < n");
    auto mask = ctx.graph.subset_mask(d);
    for (int v : d.complement(ctx.order()).members)
        if (ctx.graph.neighbors_in(v, mask) < k)
            throw std::invalid_argument("k-domination: vertex " + std::to_string(v) + " has fewer than " +
                                        std::to_string(k) + " neighbors in D");
    Rational rhs(ctx.degree_sum(d) + k);
    return make_bound_report(BoundId::eq19, d.size(), ctx.spectrum.sum_largest(d.size()),
                             to_double(rhs), rhs, d, ctx.tol);
}

VertexSubset greedy_kdom(const Graph& g, int k) {
    require(k >= 1, "k-domination: k must be >= 1");
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k)
            throw std::invalid_argument("k-domination: vertex " + std::to_string(v) +
                                        " has degree below k; no proper k-dominating set is guaranteed");

    std::vector<bool> in_d(static_cast<std::size_t>(n), false);
    std::vector<int> covered(static_cast<std::size_t>(n), 0);  // neighbors already in D

    auto deficient = [&](int v) { return !in_d[static_cast<std::size_t>(v)] && covered[static_cast<std::size_t>(v)] < k; };

    while (true) {
        bool any = false;
        for (int v = 0; v < n && !any; ++v) any = deficient(v);
        if (!any) break;
        // pick the vertex fixing the most deficiency; ties prefer the lower index
        int best = -1;
        long long best_gain = -1;
        for (int w = 0; w < n; ++w) {
            if (in_d[static_cast<std::size_t>(w)]) continue;
            long long gain = deficient(w) ? 1 : 0;
            for (int x : g.neighbors(w))
                if (deficient(x)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = w;
            }
        }
        in_d[static_cast<std::size_t>(best)] = true;
        for (int x : g.neighbors(best)) ++covered[static_cast<std::size_t>(x)];
    }

    VertexSubset d;
    for (int v = 0; v < n; ++v)
        if (in_d[static_cast<std::size_t>(v)]) d.members.push_back(v);
    if (d.empty() || d.size() >= n) throw std::runtime_error("k-domination: greedy failed to find a proper set");
    if (!kdom_verify(g, d, k)) throw std::runtime_error("k-domination: greedy result failed verification");
    return d;
}

ExactIsoperimetric isoperimetric_exact(const Graph& g, int order_guard) {
    const int n = g.order();
    require(n >= 2, "isoperimetric number: requires n >= 2");
    require(n <= order_guard, "isoperimetric number: order exceeds the exhaustive guard");
    require(g.words_per_row() == 1, "isoperimetric number: order exceeds 64");

    ExactIsoperimetric best;
    bool first = true;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        int size = std::popcount(mask);
        if (2 * size > n) continue;
        long long cut = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cut += std::popcount(g.row(v)[0] & ~mask);
        }
        Rational val(cut, size);
        if (first || val < best.value ||
            (val == best.value && lex_less(VertexSubset::from_mask(mask, n), best.argmin))) {
            best.value = val;
            best.argmin = VertexSubset::from_mask(mask, n);
            first = false;
        }
    }
    return best;
}

MoharBounds mohar_bounds(const GraphContext& ctx) {
    require(ctx.connected, "mohar bounds: graph must be connected");
    const int n = ctx.order();
    MoharBounds out;
    if (n < 2) {
        out.degenerate = true;
        return out;
    }
    double lam = ctx.spectrum.lambda(n - 1);  // algebraic connectivity
    double d1 = static_cast<double>(ctx.degrees_desc[0]);
    out.lower = lam / 2.0;
    double radicand = lam * (2.0 * d1 - lam);
    out.upper = std::sqrt(std::max(0.0, radicand));
    // The upper formula fails on the smallest complete graphs and when the
    // radicand collapses; those instances are reported but never asserted.
    bool tiny_complete = n <= 3 && ctx.graph.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
    out.degenerate = n <= 2 || tiny_complete || radicand <= ctx.tol;
    return out;
}

IsoperimetricUpper isoperimetric_upper(const GraphContext& ctx) {
    require(ctx.connected, "isoperimetric upper bound: graph must be connected");
    const int n = ctx.order();
    require(n >= 2, "isoperimetric upper bound: requires n >= 2");

    IsoperimetricUpper out;
    double eig_part = 0.0;
    long long deg_part = 0;
    const int m_start = (n + 1) / 2;
    for (int m = 1; m < n; ++m) {
        eig_part += ctx.spectrum.lambda(m);
        deg_part += ctx.degrees_desc[static_cast<std::size_t>(m - 1)];
        if (m < m_start) continue;
        double v = eig_part - static_cast<double>(deg_part);
        if (m == m_start || v < out.value) {
            out.value = v;
            out.argmin_m = m;
        }
    }
    return out;
}

IsoperimetricResult isoperimetric_report(const GraphContext& ctx, int order_guard) {
    IsoperimetricResult out;
    ExactIsoperimetric exact = isoperimetric_exact(ctx.graph, order_guard);
    out.value = exact.value;
    out.argmin = exact.argmin;
    MoharBounds mb = mohar_bounds(ctx);
    out.mohar_lower = mb.lower;
    out.mohar_upper = mb.upper;
    out.mohar_degenerate = mb.degenerate;
    IsoperimetricUpper up = isoperimetric_upper(ctx);
    out.eq21_upper = up.value;
    out.eq21_argmin_m = up.argmin_m;
    return out;
}

} // namespace lapbound
