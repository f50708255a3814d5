#include "lapbound/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

namespace lapbound {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

int OrientedIncidence::out_degree(int v) const {
    int c = 0;
    for (const auto& [tail, head] : arcs)
        if (tail == v) ++c;
    return c;
}

OrientedIncidence orient(const Graph& g, const VertexSubset& u) {
    require(g.is_connected(), "orient: graph must be connected");
    require(!u.empty() && u.size() < g.order(), "orient: requires 0 < |U| < n");
    const int n = g.order();

    std::vector<bool> in_u(static_cast<std::size_t>(n), false);
    for (int v : u.members) in_u[static_cast<std::size_t>(v)] = true;
    auto mask = g.subset_mask(u);

    std::vector<std::pair<int, int>> inside, cross, outside;
    for (auto [a, b] : g.edges()) {
        bool ua = in_u[static_cast<std::size_t>(a)], ub = in_u[static_cast<std::size_t>(b)];
        if (ua && ub)
            inside.emplace_back(a, b);
        else if (!ua && !ub)
            outside.emplace_back(a, b);
        else
            cross.emplace_back(a, b);
    }

    // BFS trees inside G[U], one per component, rooted at the lowest-index
    // vertex with a neighbor outside U.  Tree edges are oriented child->parent
    // so every non-root vertex of U gains an outgoing arc; each root already
    // has one across the cut.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int start : u.members) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        // collect the component of G[U] containing start
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        visited[static_cast<std::size_t>(start)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in_u[static_cast<std::size_t>(w)] && !visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        int root = -1;
        for (int v : comp) {
            if (g.degree(v) - g.neighbors_in(v, mask) > 0) {
                root = v;
                break;
            }
        }
        if (root < 0)
            throw std::runtime_error("orient: component of G[U] with no arc into the complement");
        // BFS tree from the root
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::queue<int> bq;
        bq.push(root);
        seen[static_cast<std::size_t>(root)] = true;
        while (!bq.empty()) {
            int v = bq.front();
            bq.pop();
            for (int w : g.neighbors(v)) {
                if (in_u[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    parent[static_cast<std::size_t>(w)] = v;
                    bq.push(w);
                }
            }
        }
    }

    OrientedIncidence oi;
    oi.n = n;
    oi.u = u;

    // U-side block: E[U] and the cut edges, merged in canonical edge order.
    std::vector<std::pair<int, int>> q1_edges = inside;
    q1_edges.insert(q1_edges.end(), cross.begin(), cross.end());
    std::sort(q1_edges.begin(), q1_edges.end());
    for (auto [a, b] : q1_edges) {
        bool ua = in_u[static_cast<std::size_t>(a)], ub = in_u[static_cast<std::size_t>(b)];
        int tail, head;
        if (ua != ub) {
            tail = ua ? a : b;
        } else if (parent[static_cast<std::size_t>(a)] == b) {
            tail = a;
        } else if (parent[static_cast<std::size_t>(b)] == a) {
            tail = b;
        } else {
            tail = std::max(a, b);
        }
        head = (tail == a) ? b : a;
        oi.arcs.emplace_back(tail, head);
        oi.owner.push_back(tail);
    }
    oi.q1_count = static_cast<int>(oi.arcs.size());
    for (auto [a, b] : outside) oi.arcs.emplace_back(std::max(a, b), std::min(a, b));

    // Every vertex of U must own at least one outgoing arc.
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    for (int t : oi.owner) ++outdeg[static_cast<std::size_t>(t)];
    for (int v : u.members)
        if (outdeg[static_cast<std::size_t>(v)] == 0)
            throw std::runtime_error("orient: vertex of U without an outgoing arc");
    return oi;
}

std::vector<std::vector<int>> incidence_rows(const OrientedIncidence& oi) {
    std::vector<std::vector<int>> q(static_cast<std::size_t>(oi.n),
                                    std::vector<int>(static_cast<std::size_t>(oi.arc_count()), 0));
    for (int c = 0; c < oi.arc_count(); ++c) {
        auto [tail, head] = oi.arcs[static_cast<std::size_t>(c)];
        q[static_cast<std::size_t>(tail)][static_cast<std::size_t>(c)] = 1;
        q[static_cast<std::size_t>(head)][static_cast<std::size_t>(c)] = -1;
    }
    return q;
}

bool incidence_factorizes_laplacian(const Graph& g, const OrientedIncidence& oi) {
    if (oi.n != g.order() || oi.arc_count() != g.edge_count()) return false;
    auto q = incidence_rows(oi);
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long s = 0;
            for (int c = 0; c < oi.arc_count(); ++c)
                s += static_cast<long long>(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) *
                     q[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            long long expect = (i == j) ? g.degree(i) : (g.adjacent(i, j) ? -1 : 0);
            if (s != expect) return false;
        }
    }
    return true;
}

namespace {

// Integer Gram entry of two arcs: simple graphs share at most one endpoint.
int gram_entry(const std::pair<int, int>& x, const std::pair<int, int>& y) {
    if (x.first == y.first || x.second == y.second) return 1;
    if (x.first == y.second || x.second == y.first) return -1;
    return 0;
}

} // namespace

EdgeGram edge_gram(const OrientedIncidence& oi) {
    const int e = oi.arc_count();
    const int e1 = oi.q1_count;
    SymmetricMatrix m(e);
    for (int i = 0; i < e; ++i) {
        m.set(i, i, 2.0);
        for (int j = i + 1; j < e; ++j)
            m.set(i, j, static_cast<double>(gram_entry(oi.arcs[static_cast<std::size_t>(i)],
                                                       oi.arcs[static_cast<std::size_t>(j)])));
    }
    SymmetricMatrix m1(e1);
    for (int i = 0; i < e1; ++i)
        for (int j = i; j < e1; ++j) m1.set(i, j, m(i, j));
    return {std::move(m), std::move(m1)};
}

namespace {

// Nonzero spectra of the edge Gram matrix and the Laplacian as multisets.
bool nonzero_spectra_match(const Spectrum& gram, const Spectrum& lap, double tol) {
    std::vector<double> a, b;
    for (double v : gram.values)
        if (std::abs(v) > tol) a.push_back(v);
    for (double v : lap.values)
        if (std::abs(v) > tol) b.push_back(v);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

} // namespace

EdgeGramQuotient edge_gram_quotient(const GraphContext& ctx, const VertexSubset& u) {
    OrientedIncidence oi = orient(ctx.graph, u);
    EdgeGram eg = edge_gram(oi);
    const int m = u.size();
    const int e1 = oi.q1_count;

    // Column classes by owning vertex, in ascending vertex order.
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(m));
    std::vector<int> class_of_vertex(static_cast<std::size_t>(ctx.order()), -1);
    for (int i = 0; i < m; ++i)
        class_of_vertex[static_cast<std::size_t>(u.members[static_cast<std::size_t>(i)])] = i;
    for (int c = 0; c < e1; ++c)
        classes[static_cast<std::size_t>(class_of_vertex[static_cast<std::size_t>(oi.owner[static_cast<std::size_t>(c)])])]
            .push_back(c);

    EdgeGramQuotient out;
    out.b1.assign(static_cast<std::size_t>(m) * m, Rational(0));
    std::vector<std::vector<long long>> block_sum(static_cast<std::size_t>(m),
                                                  std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long s = 0;
            for (int r : classes[static_cast<std::size_t>(i)])
                for (int c : classes[static_cast<std::size_t>(j)])
                    s += static_cast<long long>(eg.m1(r, c));
            block_sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            out.b1[static_cast<std::size_t>(i) * m + j] =
                Rational(s, static_cast<long long>(classes[static_cast<std::size_t>(i)].size()));
        }

    // Diagonal identity b_uu = d+(u) + 1 and the trace identity, both exact.
    long long inner2 = 0;
    auto mask = ctx.graph.subset_mask(u);
    for (int v : u.members) inner2 += ctx.graph.neighbors_in(v, mask);
    long long inner_edges = inner2 / 2;
    Rational trace(0);
    for (int i = 0; i < m; ++i) {
        Rational diag = out.b1[static_cast<std::size_t>(i) * m + i];
        long long dplus = static_cast<long long>(classes[static_cast<std::size_t>(i)].size());
        if (diag != Rational(dplus + 1))
            throw std::runtime_error("edge quotient: diagonal entry differs from out-degree + 1");
        trace += diag;
    }
    if (trace != Rational(ctx.degree_sum(u) - inner_edges + m))
        throw std::runtime_error("edge quotient: trace identity failed");

    out.b1_sym = SymmetricMatrix(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double si = static_cast<double>(classes[static_cast<std::size_t>(i)].size());
            double sj = static_cast<double>(classes[static_cast<std::size_t>(j)].size());
            out.b1_sym.set(i, j,
                           static_cast<double>(block_sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                               std::sqrt(si * sj));
        }

    out.b1_spectrum = eigenvalues_sym(out.b1_sym);
    out.m1_spectrum = eigenvalues_sym(eg.m1);
    out.m_spectrum = eigenvalues_sym(eg.m_full);
    out.b1_vs_m1 = check_interlacing(out.m1_spectrum, out.b1_spectrum, ctx.tol);
    out.m1_vs_m = check_interlacing(out.m_spectrum, out.m1_spectrum, ctx.tol);
    out.gram_nonzero_spectrum_matches = nonzero_spectra_match(out.m_spectrum, ctx.spectrum, ctx.tol);

    out.report = make_bound_report(BoundId::eq12, m, ctx.spectrum.sum_largest(m), to_double(trace),
                                   trace, u, ctx.tol);
    return out;
}

EdgeGramQuotientAugmented edge_gram_quotient_augmented(const GraphContext& ctx,
                                                       const VertexSubset& u) {
    require(u.size() < ctx.order() - 1, "augmented edge quotient: requires |U| < n-1");
    OrientedIncidence oi = orient(ctx.graph, u);
    EdgeGram eg = edge_gram(oi);
    const int m = u.size();
    const int e = oi.arc_count();
    const int e1 = oi.q1_count;
    const int e2 = e - e1;

    std::vector<std::vector<int>> classes(static_cast<std::size_t>(m));
    std::vector<int> class_of_vertex(static_cast<std::size_t>(ctx.order()), -1);
    for (int i = 0; i < m; ++i)
        class_of_vertex[static_cast<std::size_t>(u.members[static_cast<std::size_t>(i)])] = i;
    for (int c = 0; c < e1; ++c)
        classes[static_cast<std::size_t>(class_of_vertex[static_cast<std::size_t>(oi.owner[static_cast<std::size_t>(c)])])]
            .push_back(c);

    EdgeGramQuotientAugmented out;
    out.b = SymmetricMatrix(m + 1);
    out.m_spectrum = eigenvalues_sym(eg.m_full);

    // Top-left block: the size-normalized compression of M1 over the classes.
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            long long s = 0;
            for (int r : classes[static_cast<std::size_t>(i)])
                for (int c : classes[static_cast<std::size_t>(j)])
                    s += static_cast<long long>(eg.m1(r, c));
            double si = static_cast<double>(classes[static_cast<std::size_t>(i)].size());
            double sj = static_cast<double>(classes[static_cast<std::size_t>(j)].size());
            out.b.set(i, j, static_cast<double>(s) / std::sqrt(si * sj));
        }

    if (e2 == 0) {
        // No edges inside the complement: the extra row and column stay zero.
        out.degenerate_no_complement_edges = true;
        out.theta1 = 0.0;
    } else {
        SymmetricMatrix gram2(e2);
        for (int i = 0; i < e2; ++i)
            for (int j = i; j < e2; ++j) gram2.set(i, j, eg.m_full(e1 + i, e1 + j));
        auto [theta1, v] = eigenpair_max(gram2);
        out.theta1 = theta1;
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            for (int r : classes[static_cast<std::size_t>(i)])
                for (int c = 0; c < e2; ++c)
                    s += eg.m_full(r, e1 + c) * v[static_cast<std::size_t>(c)];
            out.b.set(i, m, s / std::sqrt(static_cast<double>(classes[static_cast<std::size_t>(i)].size())));
        }
        double vmv = 0.0;
        for (int i = 0; i < e2; ++i)
            for (int j = 0; j < e2; ++j)
                vmv += v[static_cast<std::size_t>(i)] * gram2(i, j) * v[static_cast<std::size_t>(j)];
        out.b.set(m, m, vmv);
    }

    long long inner2 = 0;
    auto mask = ctx.graph.subset_mask(u);
    for (int vv : u.members) inner2 += ctx.graph.neighbors_in(vv, mask);
    double rhs = static_cast<double>(ctx.degree_sum(u) + m - inner2 / 2) + out.theta1;

    double trace = 0.0;
    for (int i = 0; i <= m; ++i) trace += out.b(i, i);
    out.trace_matches = std::abs(trace - rhs) <= ctx.tol;

    out.b_spectrum = eigenvalues_sym(out.b);
    out.b_vs_m = check_interlacing(out.m_spectrum, out.b_spectrum, ctx.tol);
    out.report = make_bound_report(BoundId::eq13, m, ctx.spectrum.sum_largest(m + 1), trace,
                                   std::nullopt, u, ctx.tol);
    return out;
}

} // namespace lapbound
