#include "lapbound/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "lapbound/incidence.hpp"
#include "lapbound/report_io.hpp"
#include "lapbound/search.hpp"

namespace lapbound {

using nlohmann::json;

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("labeled enumeration: n must be in [1,7]");
    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < bits; ++b)
            if (mask & (std::uint64_t{1} << b)) edges.push_back(pairs[static_cast<std::size_t>(b)]);
        fn(Graph(n, edges));
    }
}

namespace {

struct Checker {
    const GraphContext& ctx;
    std::string graph6;
    const VerifyOptions& opts;
    const ViolationSink& sink;
    VerifySummary& summary;

    void fail(const std::string& what, const std::string& detail) {
        ++summary.violations;
        if (sink) sink({graph6, what, detail});
    }

    void check_report(const BoundReport& r) {
        ++summary.checks;
        if (!r.holds) fail(std::string(bound_id_name(r.id)) + "-violated", bound_report_json(r));
    }

    void check_flag(bool ok, const std::string& what, const std::string& detail) {
        ++summary.checks;
        if (!ok) fail(what, detail);
    }

    void per_m_bounds() {
        const int n = ctx.order();
        for (int m = 1; m <= n; ++m) {
            check_report(schur_lower(ctx, m));
            check_report(low_degree_upper(ctx, m));
        }
        if (!ctx.connected) return;
        for (int m = 1; m < n; ++m) {
            check_report(grone_lower(ctx, m));
            check_report(top_degree_lower(ctx, m));
            check_report(bottom_degree_upper(ctx, m));
            check_report(bottom_degree_upper_capped(ctx, m));
        }
    }

    void subset_bounds(const VertexSubset& u) {
        const int n = ctx.order();
        const int m = u.size();
        check_report(bh_bound(ctx, u));
        if (m == n || !ctx.connected) return;

        BasicChain chain = basic_chain(ctx, u);
        check_report(chain.lower);
        check_report(chain.upper);
        check_report(gen_grone(ctx, u));
        if (n > 2) {
            BoundReport r12 = gen_grone_merris(ctx, u);
            check_report(r12);
            if (grone_merris_shape_ok(ctx.graph, u)) check_report(grone_merris(ctx, u));
            if (m < n - 1) check_report(gen_grone_merris2(ctx, u));
        }

        if (opts.check_certificates) {
            EqualityCertificate up = certify_equality(ctx, u, Side::upper);
            check_flag(up.certified == chain.upper.equality, "certificate-upper-mismatch",
                       certificate_json(up) + " vs " + bound_report_json(chain.upper));
            EqualityCertificate lo = certify_equality(ctx, u, Side::lower);
            check_flag(lo.certified == chain.lower.equality, "certificate-lower-mismatch",
                       certificate_json(lo) + " vs " + bound_report_json(chain.lower));
        }

        if (opts.check_incidence) incidence_checks(u);
    }

    void incidence_checks(const VertexSubset& u) {
        const int n = ctx.order();
        const int m = u.size();

        OrientedIncidence oi = orient(ctx.graph, u);
        check_flag(incidence_factorizes_laplacian(ctx.graph, oi), "incidence-qqt-mismatch",
                   "{\"subset\":\"" + to_string(u) + "\"}");

        try {
            EdgeGramQuotient gq = edge_gram_quotient(ctx, u);
            check_flag(gq.b1_vs_m1.holds && gq.m1_vs_m.holds, "incidence-interlacing-violated",
                       bound_report_json(gq.report));
            check_flag(gq.gram_nonzero_spectrum_matches, "incidence-gram-spectrum-mismatch",
                       bound_report_json(gq.report));
            check_report(gq.report);
            if (n > 2) {
                BoundReport direct = gen_grone_merris(ctx, u);
                check_flag(gq.report.rhs_exact && direct.rhs_exact &&
                               *gq.report.rhs_exact == *direct.rhs_exact,
                           "incidence-eq12-route-mismatch",
                           bound_report_json(gq.report) + " vs " + bound_report_json(direct));
            }
        } catch (const std::runtime_error& e) {
            ++summary.checks;
            fail("incidence-exact-identity", std::string("{\"error\":\"") + e.what() + "\"}");
        }

        if (m < n - 1) {
            EdgeGramQuotientAugmented aq = edge_gram_quotient_augmented(ctx, u);
            check_flag(aq.trace_matches, "incidence-eq13-trace-mismatch", bound_report_json(aq.report));
            check_flag(aq.b_vs_m.holds, "incidence-augmented-interlacing-violated",
                       bound_report_json(aq.report));
            check_report(aq.report);
            if (n > 2) {
                BoundReport direct = gen_grone_merris2(ctx, u);
                check_flag(std::abs(aq.report.rhs - direct.rhs) <= ctx.tol,
                           "incidence-eq13-route-mismatch",
                           bound_report_json(aq.report) + " vs " + bound_report_json(direct));
            }
        }
    }
};

} // namespace

VerifySummary verify_graph_exhaustive(const GraphContext& ctx, const VerifyOptions& opts,
                                      const ViolationSink& sink) {
    VerifySummary summary;
    summary.graphs = 1;
    Checker ck{ctx, write_graph6(ctx.graph), opts, sink, summary};
    if (opts.check_bounds) ck.per_m_bounds();
    const int n = ctx.order();
    if (n > 62) throw std::invalid_argument("exhaustive subsets: order too large");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        ck.subset_bounds(VertexSubset::from_mask(mask, n));
    return summary;
}

VerifySummary verify_graph_sampled(const GraphContext& ctx, int subset_samples, SplitMix64& rng,
                                   const VerifyOptions& opts, const ViolationSink& sink) {
    VerifySummary summary;
    summary.graphs = 1;
    Checker ck{ctx, write_graph6(ctx.graph), opts, sink, summary};
    if (opts.check_bounds) ck.per_m_bounds();
    const int n = ctx.order();
    ck.subset_bounds(VertexSubset::full(n));
    if (n >= 2) {
        for (int s = 0; s < subset_samples; ++s) {
            int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
            ck.subset_bounds(random_subset(rng, n, m));
        }
    }
    return summary;
}

VerifySummary verify_exhaustive_labeled(int n_max, const VerifyOptions& opts,
                                        const ViolationSink& sink) {
    VerifySummary total;
    for (int n = 1; n <= n_max; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!g.is_connected()) return;
            GraphContext ctx(g, opts.tol_override);
            total += verify_graph_exhaustive(ctx, opts, sink);
        });
    }
    return total;
}

VerifySummary verify_gnp_sample(int n, int graph_count, int subsets_per_graph, std::uint64_t seed,
                                const VerifyOptions& opts, const ViolationSink& sink) {
    VerifySummary total;
    SplitMix64 rng(seed);
    for (int i = 0; i < graph_count; ++i) {
        Graph g = empty_graph(1);
        while (true) {
            double p = 0.2 + 0.6 * rng.next_double();
            g = gnp(n, p, rng.next());
            if (g.is_connected()) break;
        }
        GraphContext ctx(g, opts.tol_override);
        total += verify_graph_sampled(ctx, subsets_per_graph, rng, opts, sink);
    }
    return total;
}

namespace {

// Re-evaluate one saved report.  Subset-based ids need the subset field.
BoundReport recompute(const GraphContext& ctx, BoundId id, int m,
                      const std::optional<VertexSubset>& subset) {
    switch (id) {
        case BoundId::eq2:
            return schur_lower(ctx, m);
        case BoundId::eq3:
            return low_degree_upper(ctx, m);
        case BoundId::eq4:
            return grone_lower(ctx, m);
        case BoundId::eq6:
            return top_degree_lower(ctx, m);
        case BoundId::eq7:
            return bottom_degree_upper(ctx, m);
        case BoundId::eq8:
            return bottom_degree_upper_capped(ctx, m);
        case BoundId::eq5_lower:
        case BoundId::eq5_upper: {
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            BasicChain chain = basic_chain(ctx, *subset);
            return id == BoundId::eq5_lower ? chain.lower : chain.upper;
        }
        case BoundId::eq9:
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            return gen_grone(ctx, *subset);
        case BoundId::eq10:
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            return grone_merris(ctx, *subset);
        case BoundId::eq11:
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            return bh_bound(ctx, *subset);
        case BoundId::eq12:
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            return gen_grone_merris(ctx, *subset);
        case BoundId::eq13:
            if (!subset) throw std::invalid_argument("record lacks the subset field");
            return gen_grone_merris2(ctx, *subset);
        default:
            throw std::invalid_argument("unsupported bound id in corpus record");
    }
}

} // namespace

CorpusCheck verify_corpus_file(std::istream& in, std::optional<double> tol_override,
                               const ViolationSink& sink) {
    CorpusCheck out;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            ++out.parse_errors;
            if (sink) sink({"", "corpus-parse-error", "{\"line\":" + std::to_string(line_no) + "}"});
            continue;
        }
        if (j.contains("config")) continue;  // config echo lines pass through
        if (!j.contains("graph6") || !j.contains("report")) {
            ++out.parse_errors;
            if (sink) sink({"", "corpus-malformed-record", "{\"line\":" + std::to_string(line_no) + "}"});
            continue;
        }
        ++out.records;
        std::string g6 = j["graph6"].get<std::string>();
        try {
            Graph g = parse_graph6(g6);
            GraphContext ctx(g, tol_override);
            const json& rj = j["report"];
            auto id = bound_id_from_name(rj.at("id").get<std::string>());
            if (!id) throw std::invalid_argument("unknown bound id");
            int m = rj.at("m").get<int>();
            std::optional<VertexSubset> subset;
            if (rj.contains("subset")) {
                std::vector<int> vs = rj["subset"].get<std::vector<int>>();
                subset = VertexSubset(std::move(vs));
            }
            BoundReport fresh = recompute(ctx, *id, m, subset);

            double match_tol = std::max(ctx.tol, 1e-9 * (1.0 + std::abs(fresh.lhs)));
            bool ok = rj.at("holds").get<bool>() == fresh.holds &&
                      rj.at("equality").get<bool>() == fresh.equality &&
                      std::abs(rj.at("lhs").get<double>() - fresh.lhs) <= match_tol &&
                      std::abs(rj.at("rhs").get<double>() - fresh.rhs) <= match_tol;
            if (ok && rj.contains("rhs_exact") && fresh.rhs_exact)
                ok = rj["rhs_exact"].get<std::string>() == to_fraction_string(*fresh.rhs_exact);
            if (!ok) {
                ++out.mismatches;
                if (sink)
                    sink({g6, "corpus-report-mismatch",
                          "{\"line\":" + std::to_string(line_no) + ",\"stored\":" + rj.dump() +
                              ",\"recomputed\":" + bound_report_json(fresh) + "}"});
            }
        } catch (const std::exception& e) {
            ++out.parse_errors;
            if (sink)
                sink({g6, "corpus-record-error",
                      "{\"line\":" + std::to_string(line_no) + ",\"error\":\"" + e.what() + "\"}"});
        }
    }
    return out;
}

} // namespace lapbound
