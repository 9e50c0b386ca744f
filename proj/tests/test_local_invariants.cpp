#include "doctest.h"

#include <omp.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pgraph/local_invariants.hpp"
#include "pgraph/serial_reference.hpp"

using pgraph::Partition;
using pgraph::SmallGraph;
using pgraph::VertexId;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

SmallGraph complete(std::size_t k) {
    SmallGraph h(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            h.add_edge(u, v);
    return h;
}

// Reference (max degree, max dim_loc) for n = 1..12.
constexpr std::pair<std::uint32_t, std::uint32_t> kMaxima[] = {
    {0, 0}, {1, 1}, {2, 1}, {3, 2},  {4, 2},  {6, 2},
    {7, 3}, {8, 3}, {8, 3}, {12, 3}, {13, 4}, {14, 4}};

} // namespace

TEST_CASE("SmallGraph") {
    SmallGraph h(70);
    h.add_edge(0, 69);
    h.add_edge(69, 0);
    CHECK(h.edge_count() == 1);
    CHECK(h.adjacent(69, 0));
    CHECK_FALSE(h.adjacent(1, 2));
    CHECK_THROWS(h.add_edge(3, 3));
    CHECK_THROWS(h.add_edge(0, 70));
}

TEST_CASE("neighborhood graphs") {
    const auto g4 = pgraph::build_graph(4);
    const auto nb = pgraph::neighborhood_graph(g4, g4.at(P({2, 2})));
    CHECK(nb.members == std::vector<VertexId>{g4.at(P({3, 1})), g4.at(P({2, 1, 1}))});
    CHECK(nb.graph.vertex_count() == 2);
    CHECK(nb.graph.edge_count() == 1);

    for (int n = 2; n <= 8; ++n) {
        const auto g = pgraph::build_graph(n);
        const auto top = pgraph::neighborhood_graph(g, 0);
        CHECK(top.graph.vertex_count() == 1);
        CHECK(top.graph.edge_count() == 0);
    }

    const auto g1 = pgraph::build_graph(1);
    CHECK(pgraph::neighborhood_graph(g1, 0).graph.vertex_count() == 0);

    SUBCASE("edges are exactly those of g among the neighbors") {
        const auto g = pgraph::build_graph(9);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto h = pgraph::neighborhood_graph(g, v);
            const auto row = g.neighbors(v);
            REQUIRE(h.members == std::vector<VertexId>(row.begin(), row.end()));
            for (std::size_t a = 0; a < h.members.size(); ++a)
                for (std::size_t b = 0; b < h.members.size(); ++b)
                    CHECK(h.graph.adjacent(a, b) == (a != b && g.adjacent(h.members[a], h.members[b])));
        }
    }
}

TEST_CASE("clique_number") {
    SmallGraph edge(2);
    edge.add_edge(0, 1);
    CHECK(pgraph::clique_number(edge) == 2);
    CHECK(pgraph::clique_number(SmallGraph(0)) == 0);
    CHECK(pgraph::clique_number(SmallGraph(5)) == 1);
    CHECK(pgraph::clique_number(complete(5)) == 5);
    CHECK(pgraph::clique_number(complete(64)) == 64);

    SmallGraph c5(5);
    for (std::size_t i = 0; i < 5; ++i)
        c5.add_edge(i, (i + 1) % 5);
    CHECK(pgraph::clique_number(c5) == 2);

    CHECK_THROWS_AS(pgraph::clique_number(SmallGraph(65)), pgraph::CliqueBoundError);
    CHECK_THROWS_AS(pgraph::clique_number(complete(6), {.max_vertices = 5}),
                    pgraph::CliqueBoundError);

    const auto g6 = pgraph::build_graph(6);
    CHECK(pgraph::clique_number(pgraph::neighborhood_graph(g6, g6.at(P({3, 2, 1}))).graph) == 2);

    SUBCASE("random graphs against subset enumeration") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 16)(rng);
            const double density = std::uniform_real_distribution<double>(0.1, 0.95)(rng);
            std::bernoulli_distribution coin(density);
            SmallGraph h(k);
            std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
            for (std::size_t u = 0; u < k; ++u)
                for (std::size_t v = u + 1; v < k; ++v)
                    if (coin(rng)) {
                        h.add_edge(u, v);
                        adj[u][v] = adj[v][u] = true;
                    }
            std::vector<std::size_t> all(k);
            std::iota(all.begin(), all.end(), std::size_t{0});
            CHECK(pgraph::clique_number(h) == oracle::brute_force_clique(adj, all));
        }
    }
}

TEST_CASE("local_simplex_dimension examples") {
    for (int n = 2; n <= 10; ++n) {
        const auto g = pgraph::build_graph(n);
        CHECK(pgraph::local_simplex_dimension(g, 0) == 1);
    }
    const auto g4 = pgraph::build_graph(4);
    CHECK(pgraph::local_simplex_dimension(g4, g4.at(P({2, 2}))) == 2);
    const auto g10 = pgraph::build_graph(10);
    CHECK(pgraph::local_simplex_dimension(g10, g10.at(P({4, 3, 2, 1}))) == 3);
    CHECK(pgraph::local_simplex_dimension(pgraph::build_graph(1), 0) == 0);
}

TEST_CASE("maxima for n = 1..12") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto inv = pgraph::compute_local_invariants(pgraph::build_graph(n));
        CHECK(inv.max_degree() == kMaxima[n - 1].first);
        CHECK(inv.max_simplex_dimension() == kMaxima[n - 1].second);
    }
}

TEST_CASE("staircase law") {
    for (int t = 2; t <= 6; ++t) {
        CAPTURE(t);
        const auto g = pgraph::build_graph(t * (t + 1) / 2);
        const VertexId v = g.at(pgraph::staircase(t));
        CHECK(g.degree(v) == static_cast<std::size_t>(t * (t - 1)));
        CHECK(pgraph::local_simplex_dimension(g, v) == static_cast<std::uint32_t>(t - 1));
    }
}

TEST_CASE("rectangular partitions have degree 2 and dim_loc 2") {
    for (int r = 2; r <= 5; ++r) {
        for (int m = 2; r * m <= 20; ++m) {
            CAPTURE(r);
            CAPTURE(m);
            const auto g = pgraph::build_graph(r * m);
            const VertexId v = g.at(pgraph::rectangle(r, m));
            CHECK(g.degree(v) == 2);
            CHECK(pgraph::local_simplex_dimension(g, v) == 2);
        }
    }
}

TEST_CASE("dim_loc equals brute-force clique search for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto g = pgraph::build_graph(n);
        const auto inv = pgraph::compute_local_invariants(g);
        const auto adj = oracle::corner_adjacency(oracle::partitions(n));
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<std::size_t> nbrs;
            for (std::size_t u = 0; u < adj.size(); ++u)
                if (adj[v][u])
                    nbrs.push_back(u);
            REQUIRE(nbrs.size() <= 20);
            CHECK(inv.simplex_dimension[v] == oracle::brute_force_clique(adj, nbrs));
            CHECK(inv.degree[v] == nbrs.size());
        }
    }
}

TEST_CASE("vertexwise properties") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto g = pgraph::build_graph(n);
        const auto inv = pgraph::compute_local_invariants(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const VertexId c = g.conjugate_of(v);
            CHECK(inv.degree[v] == inv.degree[c]);
            CHECK(inv.simplex_dimension[v] == inv.simplex_dimension[c]);
            CHECK(inv.simplex_dimension[v] <= inv.degree[v]);
            CHECK((inv.simplex_dimension[v] == 0) == (inv.degree[v] == 0));
        }
    }
}

TEST_CASE("layers and spectra") {
    const auto one = pgraph::layers_and_spectra(pgraph::build_graph(1));
    CHECK(one.degree_spectrum == std::vector<std::uint32_t>{0});
    CHECK(one.simplex_spectrum == std::vector<std::uint32_t>{0});

    const auto two = pgraph::layers_and_spectra(pgraph::build_graph(2));
    CHECK(two.degree_spectrum == std::vector<std::uint32_t>{1});
    CHECK(two.simplex_spectrum == std::vector<std::uint32_t>{1});

    const auto g6 = pgraph::build_graph(6);
    const auto six = pgraph::layers_and_spectra(g6);
    CHECK(six.max_degree == 6);
    CHECK(six.degree_layers.at(6) == std::vector<VertexId>{g6.at(P({3, 2, 1}))});

    const auto eleven = pgraph::layers_and_spectra(pgraph::build_graph(11));
    CHECK(eleven.max_degree == 13);
    CHECK(eleven.max_simplex_dimension == 4);

    for (int n = 1; n <= 12; ++n) {
        const auto g = pgraph::build_graph(n);
        const auto ls = pgraph::layers_and_spectra(g);
        for (const auto* layers : {&ls.degree_layers, &ls.simplex_layers}) {
            std::vector<VertexId> seen;
            std::vector<std::uint32_t> keys;
            for (const auto& [value, vs] : *layers) {
                CHECK_FALSE(vs.empty());
                CHECK(std::is_sorted(vs.begin(), vs.end()));
                seen.insert(seen.end(), vs.begin(), vs.end());
                keys.push_back(value);
            }
            std::sort(seen.begin(), seen.end());
            std::vector<VertexId> all(g.vertex_count());
            std::iota(all.begin(), all.end(), VertexId{0});
            CHECK(seen == all);
            CHECK(keys == (layers == &ls.degree_layers ? ls.degree_spectrum : ls.simplex_spectrum));
        }
        CHECK(ls.max_degree == ls.degree_spectrum.back());
        CHECK(ls.max_simplex_dimension == ls.simplex_spectrum.back());
    }
}

TEST_CASE("parallel kernel matches the serial reference") {
    for (int n : {1, 2, 5, 12, 18, 24}) {
        CAPTURE(n);
        const auto g = pgraph::build_graph(n);
        const auto par = pgraph::compute_local_invariants(g);
        const auto ser = pgraph::serial::compute_local_invariants(g);
        CHECK(par.degree == ser.degree);
        CHECK(par.simplex_dimension == ser.simplex_dimension);
    }

    const int saved = omp_get_max_threads();
    const auto g = pgraph::build_graph(22);
    omp_set_num_threads(1);
    const auto single = pgraph::compute_local_invariants(g);
    omp_set_num_threads(4);
    const auto quad = pgraph::compute_local_invariants(g);
    omp_set_num_threads(saved);
    CHECK(single.degree == quad.degree);
    CHECK(single.simplex_dimension == quad.simplex_dimension);
}

TEST_CASE("clique bound violations surface from the parallel kernel") {
    const auto g = pgraph::build_graph(10);
    CHECK_THROWS_AS(pgraph::compute_local_invariants(g, {.max_vertices = 4}),
                    pgraph::CliqueBoundError);
}
