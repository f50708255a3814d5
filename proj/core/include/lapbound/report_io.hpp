#pragma once

#include <optional>
#include <string>

#include "lapbound/applications.hpp"
#include "lapbound/bounds.hpp"
#include "lapbound/incidence.hpp"

namespace lapbound {

enum class OutputFormat { json, tsv };

/// 12 significant digits, locale-independent.
std::string format_double(double v);

/// {"id":...,"m":...,"lhs":...,"rhs":...,"rhs_exact":"p/q",...}
std::string bound_report_json(const BoundReport& r);
std::string bound_report_tsv(const BoundReport& r);

std::string certificate_json(const EqualityCertificate& c);

/// One record per graph: n, e, degrees, Laplacian spectrum.
std::string spectrum_record(const Graph& g, const std::string& graph6, OutputFormat format);

/// Record pairing a graph with a bound report, reusable as a verify corpus line.
std::string graph_report_record(const std::string& graph6, const BoundReport& r, OutputFormat format);

std::string certificate_record(const std::string& graph6, const EqualityCertificate& c);

/// Q, M, B1 (exact), B and the two realized reports for one subset.
std::string incidence_dump_json(const GraphContext& ctx, const VertexSubset& u);

struct AppsSelection {
    bool edge_connectivity = false;
    bool isoperimetric = false;
    std::optional<int> kdom_k;
    std::optional<int> expected_cut_m;
};
std::string apps_record(const GraphContext& ctx, const std::string& graph6, const AppsSelection& sel);

/// Effective run configuration echoed as the first output line.
std::string config_echo(const std::string& command, std::optional<double> tol_override,
                        OutputFormat format, std::optional<std::uint64_t> seed);

} // namespace lapbound
