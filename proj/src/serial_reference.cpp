#include "pgraph/serial_reference.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pgraph::serial {

std::vector<std::vector<VertexId>> adjacency(const std::vector<Partition>& vertices) {
    std::map<std::vector<int>, VertexId> index;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto parts = vertices[v].parts();
        index.emplace(std::vector<int>(parts.begin(), parts.end()), static_cast<VertexId>(v));
    }

    std::vector<std::vector<VertexId>> rows(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto parts = vertices[v].parts();
        std::set<VertexId> found;
        for (std::size_t src = 0; src < parts.size(); ++src) {
            for (std::size_t dst = 0; dst <= parts.size(); ++dst) {
                if (dst == src)
                    continue;
                std::vector<int> next(parts.begin(), parts.end());
                next.push_back(0);
                --next[src];
                ++next[dst];
                const Partition mu = Partition::from_unordered(std::move(next));
                if (mu == vertices[v])
                    continue;
                const auto p = mu.parts();
                found.insert(index.at(std::vector<int>(p.begin(), p.end())));
            }
        }
        rows[v].assign(found.begin(), found.end());
    }
    return rows;
}

PartitionGraph build_graph(int n) {
    std::vector<Partition> vertices = enumerate_partitions(n);
    auto rows = adjacency(vertices);
    return PartitionGraph(n, std::move(vertices), std::move(rows));
}

LocalInvariants compute_local_invariants(const PartitionGraph& g, const CliqueOptions& options) {
    LocalInvariants inv;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        inv.degree.push_back(static_cast<std::uint32_t>(g.degree(v)));
        inv.simplex_dimension.push_back(local_simplex_dimension(g, v, options));
    }
    return inv;
}

} // namespace pgraph::serial
