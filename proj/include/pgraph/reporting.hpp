#ifndef PGRAPH_REPORTING_HPP_
#define PGRAPH_REPORTING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgraph/morphology.hpp"

namespace pgraph {

/// Analyses for n = first .. last, in order of n.
std::vector<GraphAnalysis> analyze_range(int first, int last, const AnalysisOptions& options = {});

struct BasicCountsRow {
    int n = 0;
    std::size_t vertices = 0;        ///< p(n)
    std::size_t edges = 0;
    std::size_t self_conjugate = 0;  ///< |SC_n|
    std::size_t framework = 0;       ///< |F_n|
};

struct MaximaRow {
    int n = 0;
    std::uint32_t max_degree = 0;
    std::uint32_t max_simplex_dimension = 0;
};

struct CentralSpineRow {
    int n = 0;
    std::size_t central_1 = 0;  ///< |C^(1)|
    std::size_t central_2 = 0;  ///< |C^(2)|
    std::size_t spine = 0;      ///< |V(Sp_n)|
    std::size_t interior = 0;   ///< |V \ F_n|
};

using TableRow = std::variant<BasicCountsRow, MaximaRow, CentralSpineRow>;

std::vector<TableRow> basic_counts(std::span<const GraphAnalysis> analyses);
std::vector<TableRow> maxima(std::span<const GraphAnalysis> analyses);
std::vector<TableRow> central_spine(std::span<const GraphAnalysis> analyses);

/// Header plus one line per row. All rows must hold the same alternative.
std::string table_csv(std::span<const TableRow> rows);
/// Right-aligned columns for terminal display, with a title line.
std::string table_text(std::span<const TableRow> rows);

struct SpectraRow {
    int n = 0;
    std::vector<std::uint32_t> degree;   ///< ascending
    std::vector<std::uint32_t> simplex;  ///< ascending
};

std::vector<SpectraRow> spectra_report(std::span<const GraphAnalysis> analyses);
/// Columns n,degree_spectrum,simplex_spectrum; values space-separated.
std::string spectra_csv(std::span<const SpectraRow> rows);

enum class ExportFormat { json, dot, csv };

/// Throws std::invalid_argument for anything but "json", "dot", "csv".
ExportFormat parse_export_format(std::string_view name);

struct ExportFile {
    std::string name;
    std::string content;
};

/**
 * Serializes one analyzed graph. JSON and DOT produce one file each
 * (g<n>.json, g<n>.dot); CSV produces g<n>_vertices.csv and g<n>_edges.csv.
 * Output depends only on the analysis, never on locale or timing.
 */
std::vector<ExportFile> export_graph(const GraphAnalysis& analysis, ExportFormat format);

inline constexpr std::string_view kVerticesCsvHeader =
    "n,id,parts,degree,dim_loc,d_ax,in_framework,in_interior,self_conjugate,in_spine";
inline constexpr std::string_view kEdgesCsvHeader = "n,u,v";

} // namespace pgraph

#endif // PGRAPH_REPORTING_HPP_
