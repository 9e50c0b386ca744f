#ifndef PGRAPH_GRAPH_HPP_
#define PGRAPH_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgraph/partition.hpp"

namespace pgraph {

using VertexId = std::uint32_t;

/// Raised when a requested n exceeds the configured size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * The partition graph G_n. Vertices are the partitions of n in decreasing
 * lexicographic order, so vertex 0 is (n) and the last vertex is (1^n).
 * Adjacency is stored in compressed rows with each row sorted ascending.
 * Instances are immutable once constructed.
 */
class PartitionGraph {
public:
    /**
     * Takes ownership of the vertex list and one neighbor list per vertex.
     * Rows are sorted here; symmetry is the caller's responsibility and is
     * checked by the test suite rather than on every construction.
     */
    PartitionGraph(int n, std::vector<Partition> vertices,
                   std::vector<std::vector<VertexId>> adjacency);

    int n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Partition> vertices() const noexcept { return vertices_; }
    const Partition& vertex(VertexId v) const { return vertices_.at(v); }

    std::optional<VertexId> index_of(const Partition& lambda) const;
    /// Like index_of, but throws std::out_of_range for foreign partitions.
    VertexId at(const Partition& lambda) const;

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    /// Vertex index of the conjugate partition.
    VertexId conjugate_of(VertexId v) const { return conjugate_.at(v); }

private:
    int n_;
    std::vector<Partition> vertices_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<VertexId> conjugate_;
};

struct GraphOptions {
    /// Largest n build_graph accepts. p(40) = 37338.
    int max_n = 40;
};

/**
 * All partitions reachable from lambda by moving one cell from one row to
 * another row (possibly a new row), re-sorted, excluding lambda itself.
 * Returned in decreasing lexicographic order without duplicates.
 */
std::vector<Partition> neighbors(const Partition& lambda);

/// Builds G_n, generating neighbor rows in parallel across vertices.
PartitionGraph build_graph(int n, const GraphOptions& options = {});

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

/**
 * Unit-weight multi-source BFS. Returns one distance per vertex;
 * kUnreachable only if the graph were disconnected (it never is).
 * Throws std::invalid_argument on an empty or out-of-range source set.
 */
std::vector<std::uint32_t> distances_from(const PartitionGraph& g,
                                          std::span<const VertexId> sources);

} // namespace pgraph

#endif // PGRAPH_GRAPH_HPP_
