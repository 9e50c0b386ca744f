#include "pgraph/local_invariants.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace pgraph {

SmallGraph::SmallGraph(std::size_t vertex_count)
    : size_(vertex_count), words_((vertex_count + 63) / 64), bits_(size_ * words_, 0) {}

void SmallGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size_ || v >= size_ || u == v)
        throw std::invalid_argument("SmallGraph::add_edge: bad endpoints");
    if (adjacent(u, v))
        return;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edges_;
}

bool SmallGraph::adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

NeighborhoodGraph neighborhood_graph(const PartitionGraph& g, VertexId v) {
    const auto row = g.neighbors(v);
    NeighborhoodGraph out{std::vector<VertexId>(row.begin(), row.end()), SmallGraph(row.size())};
    for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = i + 1; j < row.size(); ++j)
            if (g.adjacent(row[i], row[j]))
                out.graph.add_edge(i, j);
    return out;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const SmallGraph& h) : h_(h) {}

    std::size_t run() {
        std::vector<std::size_t> all(h_.vertex_count());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        if (!all.empty())
            expand(0, all);
        return best_;
    }

private:
    // Greedy colouring of the candidates. Vertices come back grouped by colour
    // class; bound[i] is the number of classes used up to order[i], an upper
    // bound on any clique drawn from order[0..i].
    void colour_sort(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& order,
                     std::vector<std::size_t>& bound) const {
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : candidates) {
            auto fits = [&](const std::vector<std::size_t>& cls) {
                return std::none_of(cls.begin(), cls.end(),
                                    [&](std::size_t u) { return h_.adjacent(u, v); });
            };
            auto it = std::find_if(classes.begin(), classes.end(), fits);
            if (it == classes.end())
                classes.push_back({v});
            else
                it->push_back(v);
        }
        for (std::size_t k = 0; k < classes.size(); ++k) {
            for (std::size_t v : classes[k]) {
                order.push_back(v);
                bound.push_back(k + 1);
            }
        }
    }

    void expand(std::size_t depth, const std::vector<std::size_t>& candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        colour_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (depth + bound[i] <= best_)
                return;
            const std::size_t v = order[i];
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < i; ++j)
                if (h_.adjacent(v, order[j]))
                    next.push_back(order[j]);
            if (next.empty())
                best_ = std::max(best_, depth + 1);
            else
                expand(depth + 1, next);
        }
    }

    const SmallGraph& h_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t clique_number(const SmallGraph& h, const CliqueOptions& options) {
    if (h.vertex_count() > options.max_vertices)
        throw CliqueBoundError("clique search on " + std::to_string(h.vertex_count()) +
                               " vertices exceeds the bound of " +
                               std::to_string(options.max_vertices));
    return CliqueSearch(h).run();
}

std::uint32_t local_simplex_dimension(const PartitionGraph& g, VertexId v,
                                      const CliqueOptions& options) {
    return static_cast<std::uint32_t>(clique_number(neighborhood_graph(g, v).graph, options));
}

std::uint32_t LocalInvariants::max_degree() const {
    return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::uint32_t LocalInvariants::max_simplex_dimension() const {
    return simplex_dimension.empty()
               ? 0
               : *std::max_element(simplex_dimension.begin(), simplex_dimension.end());
}

LocalInvariants compute_local_invariants(const PartitionGraph& g, const CliqueOptions& options) {
    const std::size_t count = g.vertex_count();
    LocalInvariants inv{std::vector<std::uint32_t>(count), std::vector<std::uint32_t>(count)};

    // Exceptions must not escape the parallel region; remember the first one.
    std::exception_ptr failure;
    #pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        const auto v = static_cast<VertexId>(i);
        try {
            inv.degree[v] = static_cast<std::uint32_t>(g.degree(v));
            inv.simplex_dimension[v] = local_simplex_dimension(g, v, options);
        } catch (...) {
            #pragma omp critical(pgraph_local_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return inv;
}

namespace {

Layers group_by_value(const std::vector<std::uint32_t>& values) {
    Layers layers;
    for (std::size_t v = 0; v < values.size(); ++v)
        layers[values[v]].push_back(static_cast<VertexId>(v));
    return layers;
}

std::vector<std::uint32_t> keys_of(const Layers& layers) {
    std::vector<std::uint32_t> out;
    for (const auto& [value, members] : layers)
        out.push_back(value);
    return out;
}

} // namespace

LayersAndSpectra layers_and_spectra(const LocalInvariants& invariants) {
    LayersAndSpectra out;
    out.degree_layers = group_by_value(invariants.degree);
    out.simplex_layers = group_by_value(invariants.simplex_dimension);
    out.degree_spectrum = keys_of(out.degree_layers);
    out.simplex_spectrum = keys_of(out.simplex_layers);
    out.max_degree = invariants.max_degree();
    out.max_simplex_dimension = invariants.max_simplex_dimension();
    return out;
}

LayersAndSpectra layers_and_spectra(const PartitionGraph& g) {
    return layers_and_spectra(compute_local_invariants(g));
}

} // namespace pgraph
