#include "pgraph/atlas.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pgraph {

std::string_view mode_name(AtlasMode mode) {
    switch (mode) {
    case AtlasMode::structure:
        return "structure";
    case AtlasMode::degree:
        return "degree";
    case AtlasMode::simplex:
        return "simplex";
    case AtlasMode::central_spine:
        return "central_spine";
    }
    return "unknown";
}

AtlasMode parse_atlas_mode(std::string_view name) {
    for (AtlasMode m : kAllAtlasModes)
        if (mode_name(m) == name)
            return m;
    throw std::invalid_argument("unknown atlas mode '" + std::string(name) + "'");
}

AtlasLayout layout(const PartitionGraph& g) {
    AtlasLayout out;
    out.n = g.n();
    out.x.resize(g.vertex_count());
    out.y.resize(g.vertex_count());

    // Vertices are already in decreasing lex order, so walking them in index
    // order fills every column top to bottom.
    std::map<int, std::vector<VertexId>> columns;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Partition& p = g.vertex(v);
        out.x[v] = p.largest() - p.length();
        columns[out.x[v]].push_back(v);
    }
    for (const auto& [x, members] : columns) {
        const int k = static_cast<int>(members.size());
        for (int i = 0; i < k; ++i)
            out.y[members[static_cast<std::size_t>(i)]] = i - (k - 1) / 2;
    }
    const auto [min_x, max_x] = std::minmax_element(out.x.begin(), out.x.end());
    const auto [min_y, max_y] = std::minmax_element(out.y.begin(), out.y.end());
    out.min_x = *min_x;
    out.max_x = *max_x;
    out.min_y = *min_y;
    out.max_y = *max_y;
    return out;
}

std::size_t ColorScale::step(std::uint32_t value) const {
    if (max <= min)
        return 0;
    const double clamped = std::clamp<double>(value, min, max);
    const double t = (clamped - min) / static_cast<double>(max - min);
    return static_cast<std::size_t>(std::lround(t * (kSequentialPalette.size() - 1)));
}

std::string_view ColorScale::color(std::uint32_t value) const {
    return kSequentialPalette[step(value)];
}

ColorScale series_scale(std::span<const GraphAnalysis> analyses, AtlasMode mode) {
    if (mode != AtlasMode::degree && mode != AtlasMode::simplex)
        return {};
    ColorScale scale{UINT32_MAX, 0};
    for (const auto& a : analyses) {
        const auto& values =
            mode == AtlasMode::degree ? a.invariants.degree : a.invariants.simplex_dimension;
        for (auto v : values) {
            scale.min = std::min(scale.min, v);
            scale.max = std::max(scale.max, v);
        }
    }
    if (scale.min > scale.max)
        return {};
    return scale;
}

namespace {

constexpr std::string_view kFrameworkTint = "#c6dbef";
constexpr std::string_view kWhite = "#ffffff";
constexpr std::string_view kDarkBlue = "#08306b";
constexpr std::string_view kLightGray = "#d9d9d9";
constexpr std::string_view kDarkGray = "#696969";
constexpr std::string_view kSilver = "#c0c0c0";
constexpr std::string_view kBlack = "#000000";
constexpr std::string_view kOutline = "#333333";
constexpr std::string_view kSpineOutline = "#e6550d";

constexpr double kUnit = 40.0;
constexpr double kMargin = 60.0;
constexpr double kTitleHeight = 30.0;
constexpr double kNodeRadius = 10.0;

std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string membership_classes(const GraphAnalysis& a, VertexId v) {
    const auto& rep = a.report;
    std::string out = rep.in_framework[v] ? "framework" : "interior";
    if (rep.self_conjugate[v])
        out += " sc";
    if (rep.in_central(v, 1))
        out += " c1";
    if (rep.in_central(v, 2))
        out += " c2";
    if (rep.in_spine[v])
        out += " spine";
    return out;
}

} // namespace

NodeStyle node_style(const GraphAnalysis& a, VertexId v, AtlasMode mode, const ColorScale& scale) {
    const auto& rep = a.report;
    NodeStyle style{kWhite, kOutline, 1.0, membership_classes(a, v)};
    switch (mode) {
    case AtlasMode::structure:
        if (rep.self_conjugate[v])
            style.fill = kDarkBlue;
        else if (rep.in_framework[v])
            style.fill = kFrameworkTint;
        break;
    case AtlasMode::degree:
        style.fill = scale.color(a.invariants.degree[v]);
        break;
    case AtlasMode::simplex:
        style.fill = scale.color(a.invariants.simplex_dimension[v]);
        break;
    case AtlasMode::central_spine:
        if (rep.self_conjugate[v])
            style.fill = kBlack;
        else if (rep.in_central(v, 1))
            style.fill = kSilver;
        else if (rep.in_central(v, 2))
            style.fill = kDarkGray;
        else if (rep.in_framework[v])
            style.fill = kLightGray;
        if (rep.in_spine[v]) {
            style.stroke = kSpineOutline;
            style.stroke_width = 4.0;
        }
        break;
    }
    return style;
}

namespace {

struct Extent {
    double width;
    double height;
};

Extent panel_extent(const AtlasLayout& l, double unit) {
    return {(l.max_x - l.min_x) * unit + 2 * kMargin,
            (l.max_y - l.min_y) * unit + 2 * kMargin + kTitleHeight};
}

class Svg {
public:
    Svg(double width, double height) {
        out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
                num(height) + "\" viewBox=\"0 0 " + num(width) + ' ' + num(height) + "\">\n";
        out_ += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
                "\" fill=\"#ffffff\"/>\n";
    }

    void raw(const std::string& s) { out_ += s; }

    void text(double x, double y, std::string_view body, double size,
              std::string_view anchor = "start") {
        out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
                num(size) + "\" text-anchor=\"" + std::string(anchor) + "\">" + std::string(body) +
                "</text>\n";
    }

    void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width,
              std::string_view extra = {}) {
        out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
                num(y2) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) +
                '"';
        if (!extra.empty())
            out_ += ' ' + std::string(extra);
        out_ += "/>\n";
    }

    std::string finish() && {
        out_ += "</svg>\n";
        return std::move(out_);
    }

private:
    std::string out_;
};

// Draws one panel with its top-left corner at (ox, oy).
void draw_panel(Svg& svg, const GraphAnalysis& a, const AtlasLayout& l, AtlasMode mode,
                const ColorScale& scale, double ox, double oy, double unit) {
    const auto& g = a.graph;
    const Extent ext = panel_extent(l, unit);
    auto px = [&](VertexId v) { return ox + kMargin + (l.x[v] - l.min_x) * unit; };
    auto py = [&](VertexId v) { return oy + kTitleHeight + kMargin + (l.y[v] - l.min_y) * unit; };

    svg.raw("<g class=\"panel\" data-n=\"" + std::to_string(g.n()) + "\">\n");
    svg.text(ox + ext.width / 2, oy + kTitleHeight - 8, "G_" + std::to_string(g.n()), 16, "middle");

    const double axis_x = ox + kMargin + (0 - l.min_x) * unit;
    svg.line(axis_x, oy + kTitleHeight + kMargin / 2, axis_x, oy + ext.height - kMargin / 2,
             "#808080", 1.0, "stroke-dasharray=\"6 4\" class=\"axis\"");

    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId w : g.neighbors(u)) {
            if (w <= u)
                continue;
            // Same-column edges skipping over other vertices bow outward so
            // they do not run through the nodes in between.
            if (l.x[u] == l.x[w] && std::abs(l.y[u] - l.y[w]) > 1) {
                const double bow = 0.35 * unit * std::abs(l.y[u] - l.y[w]);
                const double cx = px(u) + bow;
                const double cy = (py(u) + py(w)) / 2;
                svg.raw("<path d=\"M " + num(px(u)) + ' ' + num(py(u)) + " Q " + num(cx) + ' ' +
                        num(cy) + ' ' + num(px(w)) + ' ' + num(py(w)) +
                        "\" fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"1.00\"/>\n");
            } else {
                svg.line(px(u), py(u), px(w), py(w), "#9e9e9e", 1.0);
            }
        }
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const NodeStyle s = node_style(a, v, mode, scale);
        svg.raw("<circle cx=\"" + num(px(v)) + "\" cy=\"" + num(py(v)) + "\" r=\"" +
                num(kNodeRadius) + "\" fill=\"" + std::string(s.fill) + "\" stroke=\"" +
                std::string(s.stroke) + "\" stroke-width=\"" + num(s.stroke_width) +
                "\" class=\"" + s.classes + "\" data-parts=\"" + g.vertex(v).to_string() +
                "\" data-x=\"" + std::to_string(l.x[v]) + "\"><title>" + g.vertex(v).to_string() +
                "</title></circle>\n");
    }
    svg.raw("</g>\n");
}

} // namespace

std::string render_panel(const GraphAnalysis& analysis, AtlasMode mode, const ColorScale& scale) {
    const AtlasLayout l = layout(analysis.graph);
    const Extent ext = panel_extent(l, kUnit);
    Svg svg(ext.width, ext.height);
    draw_panel(svg, analysis, l, mode, scale, 0, 0, kUnit);
    return std::move(svg).finish();
}

std::vector<AtlasDocument> render_series(std::span<const GraphAnalysis> analyses, AtlasMode mode,
                                         const std::vector<NGroup>& groups) {
    auto find = [&](int n) -> const GraphAnalysis& {
        for (const auto& a : analyses)
            if (a.graph.n() == n)
                return a;
        throw std::invalid_argument("render_series: no analysis for n = " + std::to_string(n));
    };

    std::vector<const GraphAnalysis*> covered;
    for (const auto& [first, last] : groups)
        for (int n = first; n <= last; ++n)
            covered.push_back(&find(n));
    ColorScale scale{};
    if (mode == AtlasMode::degree || mode == AtlasMode::simplex) {
        scale = ColorScale{UINT32_MAX, 0};
        for (const GraphAnalysis* a : covered) {
            const auto one = series_scale(std::span(a, 1), mode);
            scale.min = std::min(scale.min, one.min);
            scale.max = std::max(scale.max, one.max);
        }
    }

    constexpr int kColumns = 2;
    constexpr double kHeader = 50.0;
    std::vector<AtlasDocument> out;
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto [first, last] = groups[k];
        std::vector<const GraphAnalysis*> members;
        std::vector<AtlasLayout> layouts;
        double cell_w = 0, cell_h = 0;
        for (int n = first; n <= last; ++n) {
            members.push_back(&find(n));
            layouts.push_back(layout(members.back()->graph));
            const Extent e = panel_extent(layouts.back(), kUnit);
            cell_w = std::max(cell_w, e.width);
            cell_h = std::max(cell_h, e.height);
        }
        const int rows = (static_cast<int>(members.size()) + kColumns - 1) / kColumns;
        const int cols = std::min<int>(kColumns, static_cast<int>(members.size()));
        Svg svg(cell_w * cols, kHeader + cell_h * rows);
        svg.text(20, 32,
                 std::string(mode_name(mode)) + " atlas, part " + std::to_string(k + 1) + ": n = " +
                     std::to_string(first) + ".." + std::to_string(last),
                 20);
        if (mode == AtlasMode::degree || mode == AtlasMode::simplex) {
            svg.text(cell_w * cols - 20, 32,
                     "scale " + std::to_string(scale.min) + ".." + std::to_string(scale.max), 14,
                     "end");
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            const double ox = cell_w * static_cast<double>(i % kColumns);
            const double oy = kHeader + cell_h * static_cast<double>(i / kColumns);
            draw_panel(svg, *members[i], layouts[i], mode, scale, ox, oy, kUnit);
        }
        out.push_back({"atlas_" + std::string(mode_name(mode)) + "_part" + std::to_string(k + 1) +
                           ".svg",
                       std::move(svg).finish()});
    }
    return out;
}

AtlasDocument render_focus(const GraphAnalysis& analysis) {
    constexpr double kFocusUnit = 60.0;
    constexpr double kLabelColumn = 220.0;
    const auto& g = analysis.graph;
    const AtlasLayout l = layout(g);
    const Extent ext = panel_extent(l, kFocusUnit);
    Svg svg(ext.width + kLabelColumn, ext.height);
    draw_panel(svg, analysis, l, AtlasMode::structure, ColorScale{}, 0, 0, kFocusUnit);

    // Labels stacked in axis order down the right-hand column.
    const auto& axis = analysis.report.sc_axis;
    const double label_x = ext.width + 40;
    const double top = kTitleHeight + kMargin;
    const double span_h = ext.height - top - kMargin;
    svg.raw("<g class=\"labels\">\n");
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const VertexId v = axis[i];
        const double ly = top + span_h * (static_cast<double>(i) + 0.5) / static_cast<double>(axis.size());
        const double vx = kMargin + (l.x[v] - l.min_x) * kFocusUnit;
        const double vy = kTitleHeight + kMargin + (l.y[v] - l.min_y) * kFocusUnit;
        svg.line(vx + kNodeRadius, vy, label_x - 6, ly, "#08306b", 1.0, "class=\"leader\"");
        svg.text(label_x, ly + 5, g.vertex(v).to_string(), 16);
    }
    svg.raw("</g>\n");
    return {"g" + std::to_string(g.n()) + "_focus.svg", std::move(svg).finish()};
}

} // namespace pgraph
