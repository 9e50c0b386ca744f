#ifndef PGRAPH_SERIAL_REFERENCE_HPP_
#define PGRAPH_SERIAL_REFERENCE_HPP_

// Single-threaded reference versions of the parallel kernels. They share no
// code with the kernels beyond the Partition type and exist so tests and the
// benchmark can compare against them.

#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/local_invariants.hpp"

namespace pgraph::serial {

/**
 * Adjacency rows of G_n by brute force over (source row, target row) index
 * pairs, including the empty row past the end, deduplicated through a set.
 */
std::vector<std::vector<VertexId>> adjacency(const std::vector<Partition>& vertices);

PartitionGraph build_graph(int n);

/// Same outputs as pgraph::compute_local_invariants, one vertex at a time.
LocalInvariants compute_local_invariants(const PartitionGraph& g,
                                         const CliqueOptions& options = {});

} // namespace pgraph::serial

#endif // PGRAPH_SERIAL_REFERENCE_HPP_
