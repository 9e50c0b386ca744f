#ifndef PGRAPH_ATLAS_HPP_
#define PGRAPH_ATLAS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgraph/morphology.hpp"

namespace pgraph {

enum class AtlasMode { structure, degree, simplex, central_spine };

inline constexpr std::array<AtlasMode, 4> kAllAtlasModes{
    AtlasMode::structure, AtlasMode::degree, AtlasMode::simplex, AtlasMode::central_spine};

std::string_view mode_name(AtlasMode mode);
/// Throws std::invalid_argument for unknown names.
AtlasMode parse_atlas_mode(std::string_view name);

/**
 * Planar placement of G_n. The horizontal coordinate is lambda_1 - l(lambda),
 * so conjugates mirror across x = 0 and self-conjugate partitions sit on it.
 * Within a column, vertices are stacked in decreasing lexicographic order at
 * consecutive integer heights y = i - floor((k - 1) / 2) for a column of k.
 */
struct AtlasLayout {
    int n = 0;
    std::vector<int> x;
    std::vector<int> y;
    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

AtlasLayout layout(const PartitionGraph& g);

/// Eight-step sequential palette over [min, max], sampled linearly.
struct ColorScale {
    std::uint32_t min = 0;
    std::uint32_t max = 0;

    std::size_t step(std::uint32_t value) const;
    std::string_view color(std::uint32_t value) const;
};

inline constexpr std::array<std::string_view, 8> kSequentialPalette{
    "#440154", "#46327e", "#365c8d", "#277f8e", "#1fa187", "#4ac16d", "#a0da39", "#fde725"};

/// Range of degree (or dim_loc) over every graph of a series; trivial for other modes.
ColorScale series_scale(std::span<const GraphAnalysis> analyses, AtlasMode mode);

struct NodeStyle {
    std::string_view fill;
    std::string_view stroke;
    double stroke_width = 1.0;
    std::string classes;  ///< space-separated membership tags
};

NodeStyle node_style(const GraphAnalysis& analysis, VertexId v, AtlasMode mode,
                     const ColorScale& scale);

/// Standalone SVG document holding one panel.
std::string render_panel(const GraphAnalysis& analysis, AtlasMode mode, const ColorScale& scale);

struct AtlasDocument {
    std::string name;
    std::string content;
};

using NGroup = std::pair<int, int>;  ///< inclusive n range of one page

inline const std::vector<NGroup> kDefaultGroups{{1, 4}, {5, 8}, {9, 12}};

/**
 * One page per group, named atlas_<mode>_part<k>.svg, panels in a two-column
 * grid ordered by n. `analyses` must cover every n of every group; the color
 * scale is shared across the whole series.
 */
std::vector<AtlasDocument> render_series(std::span<const GraphAnalysis> analyses, AtlasMode mode,
                                         const std::vector<NGroup>& groups = kDefaultGroups);

/// Large single-graph page with self-conjugate vertices labeled via leader lines.
AtlasDocument render_focus(const GraphAnalysis& analysis);

} // namespace pgraph

#endif // PGRAPH_ATLAS_HPP_
