#include "pgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pgraph {

PartitionGraph::PartitionGraph(int n, std::vector<Partition> vertices,
                               std::vector<std::vector<VertexId>> adjacency)
    : n_(n), vertices_(std::move(vertices)) {
    if (adjacency.size() != vertices_.size())
        throw std::invalid_argument("PartitionGraph: one adjacency row per vertex required");
    offsets_.reserve(vertices_.size() + 1);
    offsets_.push_back(0);
    for (auto& row : adjacency) {
        std::sort(row.begin(), row.end());
        targets_.insert(targets_.end(), row.begin(), row.end());
        offsets_.push_back(targets_.size());
    }
    conjugate_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        conjugate_[v] = at(conjugate(vertices_[v]));
}

std::optional<VertexId> PartitionGraph::index_of(const Partition& lambda) const {
    if (lambda.weight() != n_)
        return std::nullopt;
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), lambda, DecreasingLex{});
    if (it == vertices_.end() || !(*it == lambda))
        return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

VertexId PartitionGraph::at(const Partition& lambda) const {
    if (auto v = index_of(lambda))
        return *v;
    throw std::out_of_range("partition " + lambda.to_string() + " is not a vertex of G_" +
                            std::to_string(n_));
}

std::span<const VertexId> PartitionGraph::neighbors(VertexId v) const {
    if (v >= vertices_.size())
        throw std::out_of_range("vertex index out of range");
    return std::span<const VertexId>(targets_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t PartitionGraph::degree(VertexId v) const {
    return neighbors(v).size();
}

bool PartitionGraph::adjacent(VertexId u, VertexId v) const {
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

namespace {

// One cell leaves a row of length `from` and joins a row of length `to`
// (to == 0 opens a new row). Moves with to == from - 1 only swap the two
// row lengths and are skipped. Distinct (from, to) pairs give distinct
// results, so no deduplication is needed.
std::vector<Partition> transfer_targets(const Partition& lambda) {
    const auto parts = lambda.parts();
    std::vector<std::pair<int, int>> runs;  // (value, multiplicity)
    for (int p : parts) {
        if (!runs.empty() && runs.back().first == p)
            ++runs.back().second;
        else
            runs.emplace_back(p, 1);
    }

    std::vector<Partition> out;
    for (const auto& [from, from_count] : runs) {
        auto apply = [&](int to) {
            std::vector<int> next(parts.begin(), parts.end());
            *std::find(next.begin(), next.end(), from) -= 1;
            if (to == 0)
                next.push_back(1);
            else
                *std::find(next.rbegin(), next.rend(), to) += 1;
            out.push_back(Partition::from_unordered(std::move(next)));
        };
        for (const auto& [to, to_count] : runs) {
            if (to == from - 1 || (to == from && to_count < 2))
                continue;
            apply(to);
        }
        if (from != 1)
            apply(0);
    }
    std::sort(out.begin(), out.end(), DecreasingLex{});
    return out;
}

} // namespace

std::vector<Partition> neighbors(const Partition& lambda) {
    return transfer_targets(lambda);
}

PartitionGraph build_graph(int n, const GraphOptions& options) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (n > options.max_n)
        throw SizeGuardError("n = " + std::to_string(n) + " exceeds the size guard (" +
                             std::to_string(options.max_n) + ")");

    std::vector<Partition> vertices = enumerate_partitions(n);
    std::vector<std::vector<VertexId>> adjacency(vertices.size());
    const auto count = static_cast<std::ptrdiff_t>(vertices.size());

    #pragma omp parallel for schedule(dynamic, 32)
    for (std::ptrdiff_t v = 0; v < count; ++v) {
        auto& row = adjacency[static_cast<std::size_t>(v)];
        for (const Partition& mu : transfer_targets(vertices[static_cast<std::size_t>(v)])) {
            const auto it = std::lower_bound(vertices.begin(), vertices.end(), mu, DecreasingLex{});
            row.push_back(static_cast<VertexId>(it - vertices.begin()));
        }
    }
    return PartitionGraph(n, std::move(vertices), std::move(adjacency));
}

std::vector<std::uint32_t> distances_from(const PartitionGraph& g,
                                          std::span<const VertexId> sources) {
    if (sources.empty())
        throw std::invalid_argument("distances_from: empty source set");
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
        if (s >= g.vertex_count())
            throw std::invalid_argument("distances_from: source index out of range");
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace pgraph
