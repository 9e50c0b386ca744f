#ifndef PGRAPH_LOCAL_INVARIANTS_HPP_
#define PGRAPH_LOCAL_INVARIANTS_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pgraph/graph.hpp"

namespace pgraph {

/// Dense undirected graph on a handful of vertices, rows stored as bitsets.
class SmallGraph {
public:
    explicit SmallGraph(std::size_t vertex_count = 0);

    std::size_t vertex_count() const noexcept { return size_; }
    std::size_t edge_count() const noexcept { return edges_; }

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;

private:
    std::size_t size_;
    std::size_t words_;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Induced subgraph on the open neighborhood of one vertex of G_n.
struct NeighborhoodGraph {
    std::vector<VertexId> members;  ///< ascending; local vertex i is members[i]
    SmallGraph graph;
};

NeighborhoodGraph neighborhood_graph(const PartitionGraph& g, VertexId v);

class CliqueBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliqueOptions {
    std::size_t max_vertices = 64;
};

/**
 * Exact clique number by branch and bound, pruning with greedy colouring
 * bounds. 0 for the empty graph. Throws CliqueBoundError when the graph has
 * more than options.max_vertices vertices.
 */
std::size_t clique_number(const SmallGraph& h, const CliqueOptions& options = {});

/**
 * Largest simplex dimension among simplices of the clique complex that
 * contain v, i.e. the clique number of the neighborhood graph. Isolated
 * vertices get 0.
 */
std::uint32_t local_simplex_dimension(const PartitionGraph& g, VertexId v,
                                      const CliqueOptions& options = {});

/// Value -> vertices carrying it, vertices ascending.
using Layers = std::map<std::uint32_t, std::vector<VertexId>>;

struct LocalInvariants {
    std::vector<std::uint32_t> degree;
    std::vector<std::uint32_t> simplex_dimension;

    std::uint32_t max_degree() const;
    std::uint32_t max_simplex_dimension() const;
};

/// Degree and local simplex dimension of every vertex, computed in parallel.
LocalInvariants compute_local_invariants(const PartitionGraph& g,
                                         const CliqueOptions& options = {});

struct LayersAndSpectra {
    Layers degree_layers;   ///< D_d(n)
    Layers simplex_layers;  ///< L_r(n)
    std::vector<std::uint32_t> degree_spectrum;   ///< ascending
    std::vector<std::uint32_t> simplex_spectrum;  ///< ascending
    std::uint32_t max_degree = 0;
    std::uint32_t max_simplex_dimension = 0;
};

LayersAndSpectra layers_and_spectra(const LocalInvariants& invariants);
LayersAndSpectra layers_and_spectra(const PartitionGraph& g);

} // namespace pgraph

#endif // PGRAPH_LOCAL_INVARIANTS_HPP_
