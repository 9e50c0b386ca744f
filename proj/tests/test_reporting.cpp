#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "pgraph/reporting.hpp"

using pgraph::ExportFormat;

namespace {

const std::vector<pgraph::GraphAnalysis>& first_twelve() {
    static const auto analyses = pgraph::analyze_range(1, 12);
    return analyses;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

template <class Row>
const Row& row_for(const std::vector<pgraph::TableRow>& rows, int n) {
    for (const auto& r : rows)
        if (std::get<Row>(r).n == n)
            return std::get<Row>(r);
    throw std::out_of_range("no row");
}

const pgraph::ExportFile& file_named(const std::vector<pgraph::ExportFile>& files,
                                     const std::string& name) {
    for (const auto& f : files)
        if (f.name == name)
            return f;
    throw std::out_of_range(name);
}

} // namespace

TEST_CASE("analyze_range") {
    CHECK(first_twelve().size() == 12);
    CHECK(first_twelve().front().graph.n() == 1);
    CHECK_THROWS_AS(pgraph::analyze_range(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(pgraph::analyze_range(4, 3), std::invalid_argument);
}

TEST_CASE("basic counts") {
    const auto rows = pgraph::basic_counts(first_twelve());
    REQUIRE(rows.size() == 12);
    const auto& nine = row_for<pgraph::BasicCountsRow>(rows, 9);
    CHECK(nine.vertices == 30);
    CHECK(nine.edges == 73);
    CHECK(nine.self_conjugate == 2);
    CHECK(nine.framework == 15);
    const auto& one = row_for<pgraph::BasicCountsRow>(rows, 1);
    CHECK((one.vertices == 1 && one.edges == 0 && one.self_conjugate == 1 && one.framework == 1));
    const auto& eleven = row_for<pgraph::BasicCountsRow>(rows, 11);
    CHECK((eleven.vertices == 56 && eleven.edges == 170 && eleven.self_conjugate == 2 &&
           eleven.framework == 19));
    for (const auto& r : rows) {
        const auto& b = std::get<pgraph::BasicCountsRow>(r);
        CHECK(b.vertices >= 1);
        CHECK(b.framework <= b.vertices);
    }
}

TEST_CASE("maxima and central/spine rows") {
    const auto mx = pgraph::maxima(first_twelve());
    CHECK(row_for<pgraph::MaximaRow>(mx, 7).max_degree == 7);
    CHECK(row_for<pgraph::MaximaRow>(mx, 7).max_simplex_dimension == 3);
    CHECK(row_for<pgraph::MaximaRow>(mx, 1).max_degree == 0);
    CHECK(row_for<pgraph::MaximaRow>(mx, 12).max_degree == 14);
    CHECK(row_for<pgraph::MaximaRow>(mx, 12).max_simplex_dimension == 4);

    const auto cs = pgraph::central_spine(first_twelve());
    const auto& nine = row_for<pgraph::CentralSpineRow>(cs, 9);
    CHECK((nine.central_1 == 5 && nine.central_2 == 15 && nine.spine == 12 && nine.interior == 15));
    const auto& two = row_for<pgraph::CentralSpineRow>(cs, 2);
    CHECK((two.central_1 == 0 && two.central_2 == 0 && two.spine == 0 && two.interior == 0));
    const auto& twelve = row_for<pgraph::CentralSpineRow>(cs, 12);
    CHECK((twelve.central_1 == 21 && twelve.central_2 == 45 && twelve.spine == 11 &&
           twelve.interior == 55));
    for (const auto& r : cs) {
        const auto& c = std::get<pgraph::CentralSpineRow>(r);
        CHECK(c.central_1 <= c.central_2);
        CHECK(c.central_2 <= c.interior);
    }
}

TEST_CASE("table emitters agree with direct queries") {
    const auto& analyses = first_twelve();
    const auto basic = pgraph::basic_counts(analyses);
    const auto mx = pgraph::maxima(analyses);
    const auto cs = pgraph::central_spine(analyses);
    for (const auto& a : analyses) {
        const int n = a.graph.n();
        const auto& b = row_for<pgraph::BasicCountsRow>(basic, n);
        CHECK(b.vertices == a.graph.vertex_count());
        CHECK(b.edges == a.graph.edge_count());
        CHECK(b.self_conjugate == pgraph::self_conjugate_axis(a.graph).size());
        CHECK(b.framework == pgraph::boundary_framework(a.graph).vertices.size());
        const auto& m = row_for<pgraph::MaximaRow>(mx, n);
        const auto ls = pgraph::layers_and_spectra(a.graph);
        CHECK(m.max_degree == ls.max_degree);
        CHECK(m.max_simplex_dimension == ls.max_simplex_dimension);
        const auto& c = row_for<pgraph::CentralSpineRow>(cs, n);
        CHECK(c.central_1 == pgraph::central_region(a.graph, 1).size());
        CHECK(c.central_2 == pgraph::central_region(a.graph, 2).size());
        CHECK(c.spine == pgraph::spine(a.graph).vertices.size());
        CHECK(c.interior == pgraph::boundary_framework(a.graph).interior.size());
    }
}

TEST_CASE("table CSV and text") {
    const auto csv = lines(pgraph::table_csv(pgraph::basic_counts(first_twelve())));
    REQUIRE(csv.size() == 13);
    CHECK(csv[0] == "n,p,edges,sc,framework");
    CHECK(csv[12] == "12,77,253,3,22");
    const auto mx = lines(pgraph::table_csv(pgraph::maxima(first_twelve())));
    CHECK(mx[0] == "n,max_degree,max_dim_loc");
    CHECK(mx[11] == "11,13,4");
    const auto cs = lines(pgraph::table_csv(pgraph::central_spine(first_twelve())));
    CHECK(cs[0] == "n,c1,c2,spine,interior");
    CHECK(cs[9] == "9,5,15,12,15");

    const auto text = lines(pgraph::table_text(pgraph::basic_counts(first_twelve())));
    REQUIRE(text.size() >= 14);
    // Right-aligned columns: every data line has the header's width.
    for (std::size_t i = 2; i < 14; ++i)
        CHECK(text[i].size() == text[1].size());
}

TEST_CASE("spectra") {
    const auto rows = pgraph::spectra_report(first_twelve());
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].degree == std::vector<std::uint32_t>{0});
    CHECK(rows[0].simplex == std::vector<std::uint32_t>{0});
    CHECK(rows[1].degree == std::vector<std::uint32_t>{1});
    CHECK(rows[1].simplex == std::vector<std::uint32_t>{1});
    CHECK(rows[3].degree.back() == 3);
    const auto mx = pgraph::maxima(first_twelve());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& m = std::get<pgraph::MaximaRow>(mx[i]);
        CHECK(rows[i].degree.back() == m.max_degree);
        CHECK(rows[i].simplex.back() == m.max_simplex_dimension);
    }
    const auto csv = lines(pgraph::spectra_csv(rows));
    CHECK(csv[0] == "n,degree_spectrum,simplex_spectrum");
    CHECK(csv[1] == "1,0,0");
}

TEST_CASE("export formats") {
    CHECK(pgraph::parse_export_format("json") == ExportFormat::json);
    CHECK(pgraph::parse_export_format("dot") == ExportFormat::dot);
    CHECK(pgraph::parse_export_format("csv") == ExportFormat::csv);
    CHECK_THROWS_AS(pgraph::parse_export_format("graphml"), std::invalid_argument);
    CHECK_THROWS_AS(pgraph::parse_export_format("JSON"), std::invalid_argument);
}

TEST_CASE("JSON export") {
    const auto& analyses = first_twelve();
    const auto g1 = pgraph::export_graph(analyses[0], ExportFormat::json);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].name == "g1.json");
    const auto j1 = nlohmann::json::parse(g1[0].content);
    CHECK(j1["vertices"].size() == 1);
    CHECK(j1["edges"].empty());

    const auto j2 = nlohmann::json::parse(pgraph::export_graph(analyses[1], ExportFormat::json)[0].content);
    for (const auto& v : j2["vertices"])
        CHECK(v["d_ax"] == "inf");

    for (const auto& a : analyses) {
        const auto content = pgraph::export_graph(a, ExportFormat::json)[0].content;
        const auto parsed = nlohmann::ordered_json::parse(content);
        CHECK(parsed.dump(2) + "\n" == content);
        CHECK(pgraph::export_graph(a, ExportFormat::json)[0].content == content);

        CHECK(parsed["n"] == a.graph.n());
        CHECK(parsed["edges"].size() == a.graph.edge_count());
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : parsed["edges"]) {
            CHECK(e[0].get<int>() < e[1].get<int>());
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        CHECK(std::is_sorted(edges.begin(), edges.end()));
        int expected_id = 0;
        for (const auto& v : parsed["vertices"]) {
            const auto id = static_cast<pgraph::VertexId>(v["id"].get<int>());
            CHECK(id == static_cast<pgraph::VertexId>(expected_id++));
            CHECK(v["parts"] == a.graph.vertex(id).to_string());
            CHECK(v["degree"] == a.invariants.degree[id]);
            CHECK(v["dim_loc"] == a.invariants.simplex_dimension[id]);
            CHECK(v["flags"]["framework"] == static_cast<bool>(a.report.in_framework[id]));
            CHECK(v["flags"]["spine"] == static_cast<bool>(a.report.in_spine[id]));
            CHECK(v["flags"]["central_1"] == a.report.in_central(id, 1));
        }
    }
}

TEST_CASE("DOT export") {
    const auto files = pgraph::export_graph(first_twelve()[3], ExportFormat::dot);
    REQUIRE(files.size() == 1);
    CHECK(files[0].name == "g4.dot");
    const auto ls = lines(files[0].content);
    CHECK(ls.front().rfind("graph ", 0) == 0);
    CHECK(ls.back() == "}");
    int nodes = 0, edges = 0;
    for (const auto& l : ls) {
        if (l.find("[label=") != std::string::npos)
            ++nodes;
        if (l.find(" -- ") != std::string::npos)
            ++edges;
    }
    CHECK(nodes == 5);
    CHECK(edges == 5);
    CHECK(files[0].content.find("label=\"2.1.1\"") != std::string::npos);
}

TEST_CASE("CSV export") {
    const auto files = pgraph::export_graph(first_twelve()[5], ExportFormat::csv);
    REQUIRE(files.size() == 2);
    const auto vertices = lines(file_named(files, "g6_vertices.csv").content);
    const auto edges = lines(file_named(files, "g6_edges.csv").content);
    CHECK(vertices[0] == pgraph::kVerticesCsvHeader);
    CHECK(edges[0] == pgraph::kEdgesCsvHeader);
    CHECK(vertices.size() == 12);
    CHECK(edges.size() == 18);
    CHECK(std::find(vertices.begin(), vertices.end(), "6,5,3.2.1,6,2,0,0,1,1,1") != vertices.end());

    const auto g2 = pgraph::export_graph(first_twelve()[1], ExportFormat::csv);
    const auto v2 = lines(file_named(g2, "g2_vertices.csv").content);
    CHECK(v2[1] == "2,0,2,1,1,inf,1,0,0,0");
}
