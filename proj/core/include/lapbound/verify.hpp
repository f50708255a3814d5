#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>

#include "lapbound/bounds.hpp"
#include "lapbound/rng.hpp"

namespace lapbound {

struct VerifyOptions {
    bool check_bounds = true;
    bool check_certificates = true;
    bool check_incidence = true;
    std::optional<double> tol_override;
};

struct Violation {
    std::string graph6;
    std::string what;    // short machine-readable tag
    std::string detail;  // JSON payload (report, counterexample data)
};
using ViolationSink = std::function<void(const Violation&)>;

struct VerifySummary {
    long long graphs = 0;
    long long checks = 0;
    long long violations = 0;

    VerifySummary& operator+=(const VerifySummary& o) {
        graphs += o.graphs;
        checks += o.checks;
        violations += o.violations;
        return *this;
    }
};

/// All 2^C(n,2) labeled graphs on n vertices, in edge-mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

/// Every inequality over every valid (m, U) of one graph, with exhaustive
/// subset enumeration; optionally the equality-certificate biconditional and
/// the incidence-route identities.
VerifySummary verify_graph_exhaustive(const GraphContext& ctx, const VerifyOptions& opts,
                                      const ViolationSink& sink);

/// Same checks with subset sampling instead of enumeration (per-m bounds are
/// still complete).
VerifySummary verify_graph_sampled(const GraphContext& ctx, int subset_samples, SplitMix64& rng,
                                   const VerifyOptions& opts, const ViolationSink& sink);

/// Sweep over every connected labeled graph with up to n_max vertices.
VerifySummary verify_exhaustive_labeled(int n_max, const VerifyOptions& opts,
                                        const ViolationSink& sink);

/// Seeded sweep over connected G(n,p) draws, p uniform in [0.2, 0.8).
VerifySummary verify_gnp_sample(int n, int graph_count, int subsets_per_graph, std::uint64_t seed,
                                const VerifyOptions& opts, const ViolationSink& sink);

struct CorpusCheck {
    long long records = 0;
    long long mismatches = 0;
    long long parse_errors = 0;
};

/// Re-evaluates saved {graph6, report} JSON lines (as emitted by the bound
/// command) and compares every field; mismatches are counterexamples.
CorpusCheck verify_corpus_file(std::istream& in, std::optional<double> tol_override,
                               const ViolationSink& sink);

} // namespace lapbound
