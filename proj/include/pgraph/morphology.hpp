#ifndef PGRAPH_MORPHOLOGY_HPP_
#define PGRAPH_MORPHOLOGY_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/local_invariants.hpp"

namespace pgraph {

/**
 * Graph distance to the self-conjugate axis. Infinite exactly when the axis
 * is empty; infinite compares greater than every finite distance.
 */
class AxialDistance {
public:
    static constexpr AxialDistance infinite() { return AxialDistance(); }
    static constexpr AxialDistance finite(std::uint32_t d) { return AxialDistance(d); }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    /// Throws std::logic_error when infinite.
    std::uint32_t value() const;
    /// Decimal digits, or "inf".
    std::string to_string() const;

    constexpr bool within(std::uint32_t r) const noexcept { return value_ && *value_ <= r; }

    friend constexpr bool operator==(const AxialDistance&, const AxialDistance&) = default;
    friend constexpr std::strong_ordering operator<=>(const AxialDistance& a, const AxialDistance& b) {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

private:
    constexpr AxialDistance() = default;
    constexpr explicit AxialDistance(std::uint32_t d) : value_(d) {}
    std::optional<std::uint32_t> value_;
};

/// Raised for axis-relative notions on a graph whose axis is empty (n = 2).
class UndefinedAxisError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Partition-level framework pieces.

/// {(n), (1^n)}, a single partition when n = 1.
std::vector<Partition> antenna_vertices(int n);
/// Hooks (n - k, 1^k) for k = 0 .. n - 1, in path order.
std::vector<Partition> main_chain(int n);

struct SideEdges {
    std::vector<Partition> left;   ///< (n - k, k), k = 1 .. floor(n/2)
    std::vector<Partition> right;  ///< conjugates of left, same order
};
/// Both sequences are empty for n = 1.
SideEdges side_edges(int n);

struct Framework {
    std::vector<VertexId> vertices;  ///< M_n u L_n u R_n, ascending
    std::vector<VertexId> interior;  ///< complement, ascending
};
Framework boundary_framework(const PartitionGraph& g);

/// Self-conjugate vertices in decreasing lexicographic (= ascending index) order.
std::vector<VertexId> self_conjugate_axis(const PartitionGraph& g);

std::vector<AxialDistance> axial_distance(const PartitionGraph& g);

/// Non-framework vertices within axial distance r, ascending.
std::vector<VertexId> central_region(const PartitionGraph& g, std::uint32_t r);

struct Bridge {
    VertexId from;
    VertexId to;
    std::uint32_t length;
    std::vector<VertexId> vertices;  ///< every vertex on some shortest path, endpoints included
};

struct Spine {
    std::vector<VertexId> axis;      ///< sigma_1 .. sigma_m
    std::vector<Bridge> bridges;     ///< one per consecutive (sigma_i, sigma_{i+1})
    std::vector<VertexId> vertices;  ///< axis plus all bridges, ascending

    bool empty() const noexcept { return vertices.empty(); }
};

Spine spine(const PartitionGraph& g);

enum class EdgeDirection { axial, transverse };

/**
 * Classifies the oriented edge from -> to by comparing axial distances.
 * Throws std::invalid_argument if the vertices are not adjacent and
 * UndefinedAxisError if the axis is empty.
 */
EdgeDirection classify_oriented_edge(const PartitionGraph& g,
                                     std::span<const AxialDistance> axial, VertexId from,
                                     VertexId to);
EdgeDirection classify_oriented_edge(const PartitionGraph& g, VertexId from, VertexId to);

/// Everything above for one graph, computed once.
struct MorphologyReport {
    int n = 0;
    std::vector<VertexId> antenna;
    std::vector<VertexId> main_chain;
    std::vector<VertexId> left_edge;
    std::vector<VertexId> right_edge;
    Framework framework;
    std::vector<VertexId> sc_axis;
    std::vector<AxialDistance> axial_distance;
    std::map<std::uint32_t, std::vector<VertexId>> central_regions;
    Spine spine;

    // Per-vertex membership masks.
    std::vector<bool> in_framework;
    std::vector<bool> in_spine;
    std::vector<bool> self_conjugate;

    /// Throws std::out_of_range for radii that were not requested.
    const std::vector<VertexId>& central(std::uint32_t r) const;
    bool in_central(VertexId v, std::uint32_t r) const;
};

inline constexpr std::uint32_t kDefaultRadii[] = {1, 2};

MorphologyReport analyze_morphology(const PartitionGraph& g,
                                    std::span<const std::uint32_t> radii = kDefaultRadii);

/// Graph, local invariants, and morphology for one n.
struct GraphAnalysis {
    PartitionGraph graph;
    LocalInvariants invariants;
    MorphologyReport report;
};

struct AnalysisOptions {
    GraphOptions graph;
    CliqueOptions clique;
    std::vector<std::uint32_t> radii{1, 2};
};

GraphAnalysis analyze(int n, const AnalysisOptions& options = {});

using Feature = std::function<bool(const GraphAnalysis&)>;

struct NamedFeature {
    std::string name;
    Feature test;
};

/// Least n in 1..n_max whose analysis has the feature.
std::optional<int> emergence_threshold(const Feature& feature, int n_max,
                                       const AnalysisOptions& options = {});
/// Same, over analyses already computed for n = 1, 2, ... in order.
std::optional<int> emergence_threshold(const Feature& feature,
                                       std::span<const GraphAnalysis> analyses);

/**
 * |SC| >= 2, max dim_loc >= r for r = 1..4, nonempty narrow central region,
 * and a spine with a vertex off the axis.
 */
std::vector<NamedFeature> builtin_features();

struct ConcentrationRecord {
    int n = 0;
    std::uint32_t radius = 0;
    bool axis_empty = false;
    std::vector<VertexId> max_degree_vertices;
    std::vector<VertexId> max_dimension_vertices;
    bool degree_contained = false;     ///< max-degree vertices all lie in C^(radius)
    bool dimension_contained = false;  ///< max-dim_loc vertices all lie in C^(radius)
};

/// Empirical containment check of extremal vertices in C^(radius); radius >= 1.
ConcentrationRecord concentration_record(const GraphAnalysis& analysis, std::uint32_t radius);
std::vector<ConcentrationRecord> concentration_scan(int n_first, int n_last, std::uint32_t radius,
                                                    const AnalysisOptions& options = {});

} // namespace pgraph

#endif // PGRAPH_MORPHOLOGY_HPP_
