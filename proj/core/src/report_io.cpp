#include "lapbound/report_io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace lapbound {

using nlohmann::json;

namespace {

// Round to 12 significant digits before emitting so output is stable and
// readable; the parsed-back double keeps the dump deterministic.
json json_number(double v) {
    return json::parse(format_double(v));
}

json subset_json(const VertexSubset& u) {
    json a = json::array();
    for (int v : u.members) a.push_back(v);
    return a;
}

json spectrum_json(const Spectrum& s) {
    json a = json::array();
    for (double v : s.values) a.push_back(json_number(v));
    return a;
}

json report_json_obj(const BoundReport& r) {
    json j;
    j["id"] = std::string(bound_id_name(r.id));
    j["m"] = r.m;
    j["lhs"] = json_number(r.lhs);
    j["rhs"] = json_number(r.rhs);
    if (r.rhs_exact) j["rhs_exact"] = to_fraction_string(*r.rhs_exact);
    j["slack"] = json_number(r.slack);
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    if (r.subset) j["subset"] = subset_json(*r.subset);
    return j;
}

json certificate_json_obj(const EqualityCertificate& c) {
    json j;
    j["side"] = c.side == Side::upper ? "upper" : "lower";
    j["all_or_none"] = c.all_or_none;
    j["eigen_condition"] = c.eigen_condition;
    j["b"] = to_fraction_string(c.b);
    j["theta"] = spectrum_json(c.theta);
    j["complement_disconnected"] = c.complement_disconnected;
    j["certified"] = c.certified;
    return j;
}

json rational_matrix_json(const std::vector<Rational>& m, int order) {
    json rows = json::array();
    for (int i = 0; i < order; ++i) {
        json row = json::array();
        for (int j = 0; j < order; ++j)
            row.push_back(to_fraction_string(m[static_cast<std::size_t>(i) * order + j]));
        rows.push_back(row);
    }
    return rows;
}

json dense_matrix_json(const SymmetricMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(json_number(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string bound_report_json(const BoundReport& r) {
    return report_json_obj(r).dump();
}

std::string bound_report_tsv(const BoundReport& r) {
    std::string out;
    out += bound_id_name(r.id);
    out += '\t' + std::to_string(r.m);
    out += '\t' + format_double(r.lhs);
    out += '\t' + format_double(r.rhs);
    out += '\t' + (r.rhs_exact ? to_fraction_string(*r.rhs_exact) : std::string("-"));
    out += '\t' + format_double(r.slack);
    out += '\t' + std::string(r.holds ? "holds" : "VIOLATED");
    out += '\t' + std::string(r.equality ? "equality" : "strict");
    out += '\t' + (r.subset ? to_string(*r.subset) : std::string("-"));
    return out;
}

std::string certificate_json(const EqualityCertificate& c) {
    return certificate_json_obj(c).dump();
}

std::string spectrum_record(const Graph& g, const std::string& graph6, OutputFormat format) {
    Spectrum sp = laplacian_spectrum(g);
    if (format == OutputFormat::json) {
        json j;
        j["graph6"] = graph6;
        j["n"] = g.order();
        j["e"] = g.edge_count();
        json deg = json::array();
        for (int d : g.degrees()) deg.push_back(d);
        j["degrees"] = deg;
        j["spectrum"] = spectrum_json(sp);
        return j.dump();
    }
    std::string out = graph6;
    out += '\t' + std::to_string(g.order());
    out += '\t' + std::to_string(g.edge_count());
    out += '\t';
    for (int i = 0; i < sp.size(); ++i) {
        if (i) out += ',';
        out += format_double(sp.values[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string graph_report_record(const std::string& graph6, const BoundReport& r, OutputFormat format) {
    if (format == OutputFormat::json) {
        json j;
        j["graph6"] = graph6;
        j["report"] = report_json_obj(r);
        return j.dump();
    }
    return graph6 + '\t' + bound_report_tsv(r);
}

std::string certificate_record(const std::string& graph6, const EqualityCertificate& c) {
    json j;
    j["graph6"] = graph6;
    j["certificate"] = certificate_json_obj(c);
    return j.dump();
}

std::string incidence_dump_json(const GraphContext& ctx, const VertexSubset& u) {
    json j;
    j["graph6"] = write_graph6(ctx.graph);
    j["subset"] = subset_json(u);

    OrientedIncidence oi = orient(ctx.graph, u);
    json arcs = json::array();
    for (auto [tail, head] : oi.arcs) arcs.push_back(json::array({tail, head}));
    j["arcs"] = arcs;
    j["q1_count"] = oi.q1_count;
    json q = json::array();
    for (const auto& row : incidence_rows(oi)) {
        json r = json::array();
        for (int x : row) r.push_back(x);
        q.push_back(r);
    }
    j["q"] = q;

    EdgeGram eg = edge_gram(oi);
    j["m"] = dense_matrix_json(eg.m_full);

    EdgeGramQuotient gq = edge_gram_quotient(ctx, u);
    j["b1"] = rational_matrix_json(gq.b1, u.size());
    j["b1_sym"] = dense_matrix_json(gq.b1_sym);
    j["eq12"] = report_json_obj(gq.report);

    if (u.size() < ctx.order() - 1) {
        EdgeGramQuotientAugmented aq = edge_gram_quotient_augmented(ctx, u);
        j["b"] = dense_matrix_json(aq.b);
        j["theta1"] = json_number(aq.theta1);
        j["eq13"] = report_json_obj(aq.report);
    }
    return j.dump();
}

std::string apps_record(const GraphContext& ctx, const std::string& graph6, const AppsSelection& sel) {
    json j;
    j["graph6"] = graph6;

    if (sel.edge_connectivity) {
        EdgeConnectivityBound b = edge_connectivity_bound(ctx);
        CutResult exact = exact_edge_connectivity(ctx.graph);
        json jc;
        jc["bound"] = json_number(b.value);
        jc["bound_argmin_m"] = b.argmin_m;
        jc["exact"] = exact.value;
        jc["witness"] = subset_json(exact.witness);
        j["edge_connectivity"] = jc;
    }
    if (sel.isoperimetric) {
        IsoperimetricResult r = isoperimetric_report(ctx);
        json ji;
        ji["value"] = to_fraction_string(r.value);
        ji["argmin"] = subset_json(r.argmin);
        ji["mohar_lower"] = json_number(r.mohar_lower);
        ji["mohar_upper"] = json_number(r.mohar_upper);
        ji["mohar_degenerate"] = r.mohar_degenerate;
        ji["eq21_upper"] = json_number(r.eq21_upper);
        ji["eq21_argmin_m"] = r.eq21_argmin_m;
        j["isoperimetric"] = ji;
    }
    if (sel.kdom_k) {
        int k = *sel.kdom_k;
        VertexSubset d = greedy_kdom(ctx.graph, k);
        json jk;
        jk["k"] = k;
        jk["set"] = subset_json(d);
        jk["report"] = report_json_obj(kdom_bound(ctx, d, k));
        j["kdom"] = jk;
    }
    if (sel.expected_cut_m) {
        int m = *sel.expected_cut_m;
        json je;
        je["m"] = m;
        je["expected"] = to_fraction_string(expected_cut(ctx.graph, m));
        CutWitnesses w = cut_existence(ctx.graph, m);
        je["witness_high"] = subset_json(w.u_high);
        je["cut_high"] = w.cut_high;
        je["witness_low"] = subset_json(w.u_low);
        je["cut_low"] = w.cut_low;
        j["expected_cut"] = je;
    }
    return j.dump();
}

std::string config_echo(const std::string& command, std::optional<double> tol_override,
                        OutputFormat format, std::optional<std::uint64_t> seed) {
    json j;
    j["command"] = command;
    j["tolerance"] = tol_override ? json(json_number(*tol_override)) : json("auto");
    j["format"] = format == OutputFormat::json ? "json" : "tsv";
    if (seed) j["seed"] = *seed;
    json wrap;
    wrap["config"] = j;
    if (format == OutputFormat::tsv) return "# config\t" + wrap.dump();
    return wrap.dump();
}

} // namespace lapbound
