#include "pgraph/morphology.hpp"

#include <algorithm>

namespace pgraph {

std::uint32_t AxialDistance::value() const {
    if (!value_)
        throw std::logic_error("axial distance is infinite");
    return *value_;
}

std::string AxialDistance::to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
}

std::vector<Partition> antenna_vertices(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (n == 1)
        return {Partition({1})};
    return {hook(n, 0), hook(n, n - 1)};
}

std::vector<Partition> main_chain(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    std::vector<Partition> out;
    for (int k = 0; k < n; ++k)
        out.push_back(hook(n, k));
    return out;
}

SideEdges side_edges(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    SideEdges out;
    for (int k = 1; k <= n / 2; ++k) {
        out.left.push_back(Partition({n - k, k}));
        out.right.push_back(conjugate(out.left.back()));
    }
    return out;
}

namespace {

std::vector<VertexId> indices_of(const PartitionGraph& g, const std::vector<Partition>& parts) {
    std::vector<VertexId> out;
    out.reserve(parts.size());
    for (const auto& p : parts)
        out.push_back(g.at(p));
    return out;
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Framework boundary_framework(const PartitionGraph& g) {
    const int n = g.n();
    const auto edges = side_edges(n);
    std::vector<VertexId> all = indices_of(g, main_chain(n));
    for (const auto* side : {&edges.left, &edges.right}) {
        const auto ids = indices_of(g, *side);
        all.insert(all.end(), ids.begin(), ids.end());
    }

    Framework out;
    out.vertices = sorted_unique(std::move(all));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(out.vertices.begin(), out.vertices.end(), v))
            out.interior.push_back(v);
    return out;
}

std::vector<VertexId> self_conjugate_axis(const PartitionGraph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.conjugate_of(v) == v)
            out.push_back(v);
    return out;
}

std::vector<AxialDistance> axial_distance(const PartitionGraph& g) {
    const auto axis = self_conjugate_axis(g);
    if (axis.empty())
        return std::vector<AxialDistance>(g.vertex_count(), AxialDistance::infinite());
    std::vector<AxialDistance> out;
    out.reserve(g.vertex_count());
    for (std::uint32_t d : distances_from(g, axis))
        out.push_back(AxialDistance::finite(d));
    return out;
}

namespace {

std::vector<VertexId> central_from(const std::vector<bool>& in_framework,
                                   std::span<const AxialDistance> axial, std::uint32_t r) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < axial.size(); ++v)
        if (!in_framework[v] && axial[v].within(r))
            out.push_back(v);
    return out;
}

std::vector<bool> mask_of(std::size_t size, const std::vector<VertexId>& members) {
    std::vector<bool> mask(size, false);
    for (VertexId v : members)
        mask[v] = true;
    return mask;
}

} // namespace

std::vector<VertexId> central_region(const PartitionGraph& g, std::uint32_t r) {
    const auto framework = mask_of(g.vertex_count(), boundary_framework(g).vertices);
    return central_from(framework, axial_distance(g), r);
}

Spine spine(const PartitionGraph& g) {
    Spine out;
    out.axis = self_conjugate_axis(g);
    std::vector<VertexId> all = out.axis;
    for (std::size_t i = 0; i + 1 < out.axis.size(); ++i) {
        const VertexId a = out.axis[i];
        const VertexId b = out.axis[i + 1];
        const auto from_a = distances_from(g, std::span(&a, 1));
        const auto from_b = distances_from(g, std::span(&b, 1));
        Bridge bridge{a, b, from_a[b], {}};
        // v lies on a shortest a-b path iff the two distances add up exactly.
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (from_a[v] + from_b[v] == bridge.length)
                bridge.vertices.push_back(v);
        all.insert(all.end(), bridge.vertices.begin(), bridge.vertices.end());
        out.bridges.push_back(std::move(bridge));
    }
    out.vertices = sorted_unique(std::move(all));
    return out;
}

EdgeDirection classify_oriented_edge(const PartitionGraph& g,
                                     std::span<const AxialDistance> axial, VertexId from,
                                     VertexId to) {
    if (from >= g.vertex_count() || to >= g.vertex_count() || !g.adjacent(from, to))
        throw std::invalid_argument("classify_oriented_edge: vertices are not adjacent");
    if (axial.size() != g.vertex_count())
        throw std::invalid_argument("classify_oriented_edge: axial distance size mismatch");
    if (axial[from].is_infinite())
        throw UndefinedAxisError("axial/transverse classification is undefined: G_" +
                                 std::to_string(g.n()) + " has no self-conjugate vertex");
    return axial[to] <= axial[from] ? EdgeDirection::axial : EdgeDirection::transverse;
}

EdgeDirection classify_oriented_edge(const PartitionGraph& g, VertexId from, VertexId to) {
    return classify_oriented_edge(g, axial_distance(g), from, to);
}

const std::vector<VertexId>& MorphologyReport::central(std::uint32_t r) const {
    const auto it = central_regions.find(r);
    if (it == central_regions.end())
        throw std::out_of_range("central region radius " + std::to_string(r) + " not computed");
    return it->second;
}

bool MorphologyReport::in_central(VertexId v, std::uint32_t r) const {
    return !in_framework.at(v) && axial_distance.at(v).within(r);
}

MorphologyReport analyze_morphology(const PartitionGraph& g,
                                    std::span<const std::uint32_t> radii) {
    const int n = g.n();
    const std::size_t count = g.vertex_count();
    MorphologyReport r;
    r.n = n;
    r.antenna = indices_of(g, antenna_vertices(n));
    r.main_chain = indices_of(g, main_chain(n));
    const auto sides = side_edges(n);
    r.left_edge = indices_of(g, sides.left);
    r.right_edge = indices_of(g, sides.right);
    r.framework = boundary_framework(g);
    r.sc_axis = self_conjugate_axis(g);
    r.axial_distance = axial_distance(g);
    r.spine = spine(g);

    r.in_framework = mask_of(count, r.framework.vertices);
    r.in_spine = mask_of(count, r.spine.vertices);
    r.self_conjugate = mask_of(count, r.sc_axis);
    for (std::uint32_t radius : radii)
        r.central_regions[radius] = central_from(r.in_framework, r.axial_distance, radius);
    return r;
}

GraphAnalysis analyze(int n, const AnalysisOptions& options) {
    PartitionGraph g = build_graph(n, options.graph);
    LocalInvariants inv = compute_local_invariants(g, options.clique);
    MorphologyReport report = analyze_morphology(g, options.radii);
    return GraphAnalysis{std::move(g), std::move(inv), std::move(report)};
}

std::optional<int> emergence_threshold(const Feature& feature, int n_max,
                                       const AnalysisOptions& options) {
    if (n_max < 1)
        throw std::invalid_argument("emergence_threshold: n_max must be at least 1");
    for (int n = 1; n <= n_max; ++n)
        if (feature(analyze(n, options)))
            return n;
    return std::nullopt;
}

std::optional<int> emergence_threshold(const Feature& feature,
                                       std::span<const GraphAnalysis> analyses) {
    for (const auto& a : analyses)
        if (feature(a))
            return a.graph.n();
    return std::nullopt;
}

std::vector<NamedFeature> builtin_features() {
    std::vector<NamedFeature> out;
    out.push_back({"|SC_n| >= 2", [](const GraphAnalysis& a) { return a.report.sc_axis.size() >= 2; }});
    for (std::uint32_t r = 1; r <= 4; ++r) {
        out.push_back({"max dim_loc >= " + std::to_string(r), [r](const GraphAnalysis& a) {
                           return a.invariants.max_simplex_dimension() >= r;
                       }});
    }
    out.push_back({"C_n^(1) nonempty", [](const GraphAnalysis& a) {
                       for (VertexId v = 0; v < a.graph.vertex_count(); ++v)
                           if (a.report.in_central(v, 1))
                               return true;
                       return false;
                   }});
    out.push_back({"spine leaves the axis", [](const GraphAnalysis& a) {
                       return a.report.spine.vertices.size() > a.report.sc_axis.size();
                   }});
    return out;
}

ConcentrationRecord concentration_record(const GraphAnalysis& analysis, std::uint32_t radius) {
    if (radius < 1)
        throw std::invalid_argument("concentration scan radius must be at least 1");
    const auto& inv = analysis.invariants;
    const auto& report = analysis.report;

    ConcentrationRecord rec;
    rec.n = analysis.graph.n();
    rec.radius = radius;
    rec.axis_empty = report.sc_axis.empty();
    const std::uint32_t max_deg = inv.max_degree();
    const std::uint32_t max_dim = inv.max_simplex_dimension();
    for (VertexId v = 0; v < analysis.graph.vertex_count(); ++v) {
        if (inv.degree[v] == max_deg)
            rec.max_degree_vertices.push_back(v);
        if (inv.simplex_dimension[v] == max_dim)
            rec.max_dimension_vertices.push_back(v);
    }
    auto contained = [&](const std::vector<VertexId>& vs) {
        return std::all_of(vs.begin(), vs.end(),
                           [&](VertexId v) { return report.in_central(v, radius); });
    };
    if (!rec.axis_empty) {
        rec.degree_contained = contained(rec.max_degree_vertices);
        rec.dimension_contained = contained(rec.max_dimension_vertices);
    }
    return rec;
}

std::vector<ConcentrationRecord> concentration_scan(int n_first, int n_last, std::uint32_t radius,
                                                    const AnalysisOptions& options) {
    if (n_first < 1 || n_last < n_first)
        throw std::invalid_argument("concentration_scan: invalid range");
    std::vector<ConcentrationRecord> out;
    for (int n = n_first; n <= n_last; ++n)
        out.push_back(concentration_record(analyze(n, options), radius));
    return out;
}

} // namespace pgraph
