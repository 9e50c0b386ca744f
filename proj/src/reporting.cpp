#include "pgraph/reporting.hpp"

#include <algorithm>
#include <array>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pgraph {

std::vector<GraphAnalysis> analyze_range(int first, int last, const AnalysisOptions& options) {
    if (first < 1 || last < first)
        throw std::invalid_argument("invalid n range");
    std::vector<GraphAnalysis> out;
    out.reserve(static_cast<std::size_t>(last - first + 1));
    for (int n = first; n <= last; ++n)
        out.push_back(analyze(n, options));
    return out;
}

std::vector<TableRow> basic_counts(std::span<const GraphAnalysis> analyses) {
    std::vector<TableRow> rows;
    for (const auto& a : analyses) {
        rows.emplace_back(BasicCountsRow{a.graph.n(), a.graph.vertex_count(), a.graph.edge_count(),
                                         a.report.sc_axis.size(),
                                         a.report.framework.vertices.size()});
    }
    return rows;
}

std::vector<TableRow> maxima(std::span<const GraphAnalysis> analyses) {
    std::vector<TableRow> rows;
    for (const auto& a : analyses) {
        rows.emplace_back(MaximaRow{a.graph.n(), a.invariants.max_degree(),
                                    a.invariants.max_simplex_dimension()});
    }
    return rows;
}

std::vector<TableRow> central_spine(std::span<const GraphAnalysis> analyses) {
    std::vector<TableRow> rows;
    for (const auto& a : analyses) {
        CentralSpineRow row{a.graph.n(), 0, 0, a.report.spine.vertices.size(),
                            a.report.framework.interior.size()};
        for (VertexId v = 0; v < a.graph.vertex_count(); ++v) {
            row.central_1 += a.report.in_central(v, 1) ? 1 : 0;
            row.central_2 += a.report.in_central(v, 2) ? 1 : 0;
        }
        rows.emplace_back(row);
    }
    return rows;
}

namespace {

struct Columns {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
};

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> cells_of(const TableRow& row) {
    using std::to_string;
    return std::visit(
        Overloaded{
            [](const BasicCountsRow& r) {
                return std::vector<std::string>{to_string(r.n), to_string(r.vertices),
                                                to_string(r.edges), to_string(r.self_conjugate),
                                                to_string(r.framework)};
            },
            [](const MaximaRow& r) {
                return std::vector<std::string>{to_string(r.n), to_string(r.max_degree),
                                                to_string(r.max_simplex_dimension)};
            },
            [](const CentralSpineRow& r) {
                return std::vector<std::string>{to_string(r.n), to_string(r.central_1),
                                                to_string(r.central_2), to_string(r.spine),
                                                to_string(r.interior)};
            },
        },
        row);
}

Columns columns_of(std::span<const TableRow> rows) {
    if (rows.empty())
        throw std::invalid_argument("empty table");
    const std::size_t kind = rows.front().index();
    static const std::array<Columns, 3> templates{{
        {"Vertex, edge, axis and framework counts", {"n", "p", "edges", "sc", "framework"}, {}},
        {"Degree and dim_loc maxima", {"n", "max_degree", "max_dim_loc"}, {}},
        {"Central region and spine sizes", {"n", "c1", "c2", "spine", "interior"}, {}},
    }};
    Columns out = templates[kind];
    for (const auto& row : rows) {
        if (row.index() != kind)
            throw std::invalid_argument("table rows of mixed kinds");
        out.cells.push_back(cells_of(row));
    }
    return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out.push_back(sep);
        out += items[i];
    }
    return out;
}

} // namespace

std::string table_csv(std::span<const TableRow> rows) {
    const Columns cols = columns_of(rows);
    std::string out = join(cols.header, ',') + '\n';
    for (const auto& line : cols.cells)
        out += join(line, ',') + '\n';
    return out;
}

std::string table_text(std::span<const TableRow> rows) {
    const Columns cols = columns_of(rows);
    std::vector<std::size_t> width(cols.header.size());
    for (std::size_t c = 0; c < width.size(); ++c) {
        width[c] = cols.header[c].size();
        for (const auto& line : cols.cells)
            width[c] = std::max(width[c], line[c].size());
    }
    auto format_line = [&](const std::vector<std::string>& line) {
        std::string out;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0)
                out += "  ";
            out += std::string(width[c] - line[c].size(), ' ') + line[c];
        }
        return out + '\n';
    };
    std::string out = cols.title + '\n' + format_line(cols.header);
    for (const auto& line : cols.cells)
        out += format_line(line);
    return out;
}

std::vector<SpectraRow> spectra_report(std::span<const GraphAnalysis> analyses) {
    std::vector<SpectraRow> out;
    for (const auto& a : analyses) {
        const auto ls = layers_and_spectra(a.invariants);
        out.push_back({a.graph.n(), ls.degree_spectrum, ls.simplex_spectrum});
    }
    return out;
}

std::string spectra_csv(std::span<const SpectraRow> rows) {
    auto values = [](const std::vector<std::uint32_t>& v) {
        std::vector<std::string> s;
        for (auto x : v)
            s.push_back(std::to_string(x));
        return join(s, ' ');
    };
    std::string out = "n,degree_spectrum,simplex_spectrum\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + ',' + values(r.degree) + ',' + values(r.simplex) + '\n';
    return out;
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "json")
        return ExportFormat::json;
    if (name == "dot")
        return ExportFormat::dot;
    if (name == "csv")
        return ExportFormat::csv;
    throw std::invalid_argument("unknown export format '" + std::string(name) +
                                "' (expected json, dot or csv)");
}

namespace {

std::string export_json(const GraphAnalysis& a) {
    using nlohmann::ordered_json;
    const auto& g = a.graph;
    const auto& rep = a.report;

    ordered_json vertices = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ordered_json flags;
        flags["framework"] = static_cast<bool>(rep.in_framework[v]);
        flags["interior"] = !rep.in_framework[v];
        flags["self_conjugate"] = static_cast<bool>(rep.self_conjugate[v]);
        flags["spine"] = static_cast<bool>(rep.in_spine[v]);
        for (const auto& [r, members] : rep.central_regions)
            flags["central_" + std::to_string(r)] = rep.in_central(v, r);

        ordered_json vertex;
        vertex["id"] = v;
        vertex["parts"] = g.vertex(v).to_string();
        vertex["degree"] = a.invariants.degree[v];
        vertex["dim_loc"] = a.invariants.simplex_dimension[v];
        const auto& dax = rep.axial_distance[v];
        if (dax.is_infinite())
            vertex["d_ax"] = "inf";
        else
            vertex["d_ax"] = dax.value();
        vertex["flags"] = std::move(flags);
        vertices.push_back(std::move(vertex));
    }

    ordered_json edges = ordered_json::array();
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w)
                edges.push_back({u, w});

    ordered_json doc;
    doc["n"] = g.n();
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump(2) + '\n';
}

std::string export_dot(const GraphAnalysis& a) {
    const auto& g = a.graph;
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "graph G_" << g.n() << " {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << g.vertex(v).to_string() << "\"];\n";
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w)
                out << "  v" << u << " -- v" << w << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<ExportFile> export_csv(const GraphAnalysis& a) {
    const auto& g = a.graph;
    const auto& rep = a.report;
    const std::string n = std::to_string(g.n());
    auto flag = [](bool b) { return b ? "1" : "0"; };

    std::string vertices = std::string(kVerticesCsvHeader) + '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        vertices += n + ',' + std::to_string(v) + ',' + g.vertex(v).to_string() + ',' +
                    std::to_string(a.invariants.degree[v]) + ',' +
                    std::to_string(a.invariants.simplex_dimension[v]) + ',' +
                    rep.axial_distance[v].to_string() + ',' + flag(rep.in_framework[v]) + ',' +
                    flag(!rep.in_framework[v]) + ',' + flag(rep.self_conjugate[v]) + ',' +
                    flag(rep.in_spine[v]) + '\n';
    }

    std::string edges = std::string(kEdgesCsvHeader) + '\n';
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w)
                edges += n + ',' + std::to_string(u) + ',' + std::to_string(w) + '\n';

    return {{"g" + n + "_vertices.csv", std::move(vertices)},
            {"g" + n + "_edges.csv", std::move(edges)}};
}

} // namespace

std::vector<ExportFile> export_graph(const GraphAnalysis& analysis, ExportFormat format) {
    const std::string stem = "g" + std::to_string(analysis.graph.n());
    switch (format) {
    case ExportFormat::json:
        return {{stem + ".json", export_json(analysis)}};
    case ExportFormat::dot:
        return {{stem + ".dot", export_dot(analysis)}};
    case ExportFormat::csv:
        return export_csv(analysis);
    }
    throw std::invalid_argument("unknown export format");
}

} // namespace pgraph
