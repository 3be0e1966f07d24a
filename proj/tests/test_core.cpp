#include <doctest.h>

#include <random>
#include <sstream>

#include "tripex/core.hpp"
#include "tripex/io.hpp"

using namespace tripex;

namespace {

TripleSystem triples(int n, std::vector<Triple> edges) { return TripleSystem(n, std::move(edges)); }

TripleSystem random_triples(std::mt19937_64& rng, int n, double p) {
    std::vector<Triple> edges;
    std::bernoulli_distribution keep(p);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (keep(rng)) edges.push_back(Triple{a, b, c});
    return TripleSystem(n, std::move(edges));
}

}  // namespace

TEST_CASE("vertex sets behave the same inline and spilled") {
    for (std::size_t cap : {10UL, 64UL, 65UL, 200UL}) {
        VertexSet s(cap);
        s.set(0);
        s.set(static_cast<Vertex>(cap - 1));
        CHECK(s.count() == 2);
        CHECK(s.first() == 0);
        CHECK(s.members() == std::vector<Vertex>{0, static_cast<Vertex>(cap - 1)});
        VertexSet t(cap, {0});
        CHECK(t.is_subset_of(s));
        CHECK((s - t).members() == std::vector<Vertex>{static_cast<Vertex>(cap - 1)});
        CHECK(s.intersects(t));
        CHECK(t < s);
    }
}

TEST_CASE("graph and triple system validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(TripleSystem(4, {{0, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(TripleSystem(3, {{0, 1, 3}}), InvalidInput);
    CHECK_THROWS_AS(TripleSystem(4, {{0, 1, 2}, {2, 1, 0}}), InvalidInput);

    const TripleSystem h(5, {{3, 1, 2}, {0, 1, 2}});
    CHECK(h.edges().front() == Triple{0, 1, 2});
    CHECK(h.edges().back() == Triple{1, 2, 3});
    CHECK(h.order() == 5);
}

TEST_CASE("shadow") {
    CHECK(shadow(triples(3, {})).size() == 0);
    CHECK(shadow(triples(3, {{0, 1, 2}})).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    const auto s = shadow(triples(4, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("codegree and neighbourhood") {
    const auto h1 = triples(5, {{0, 1, 2}});
    CHECK(codegree(h1, 0, 1) == 1);
    CHECK(codegree(h1, 0, 3) == 0);
    CHECK_THROWS_AS((void)codegree(h1, 2, 2), InvalidInput);
    CHECK(codegree(triples(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), 0, 1) == 3);

    CHECK(neighborhood(triples(4, {{0, 1, 2}, {0, 1, 3}}), {0, 1}).members() == std::vector<Vertex>{2, 3});
    CHECK(neighborhood(h1, {1, 2}).members() == std::vector<Vertex>{0});
    CHECK(neighborhood(h1, {3, 4}).empty());
    CHECK_THROWS_AS((void)neighborhood(h1, {1}), InvalidInput);
    CHECK_THROWS_AS((void)neighborhood(h1, {1, 2, 3}), InvalidInput);
}

TEST_CASE("edge codegree extremes") {
    CHECK(edge_codegree_extremes(triples(3, {{0, 1, 2}}), {0, 1, 2}) == CodegreeExtremes{1, 1});
    CHECK(edge_codegree_extremes(triples(4, {{0, 1, 2}, {0, 1, 3}}), {0, 1, 2}) == CodegreeExtremes{1, 2});
    CHECK(edge_codegree_extremes(triples(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), {0, 1, 2}) ==
          CodegreeExtremes{2, 2});
    CHECK_THROWS_AS((void)edge_codegree_extremes(triples(4, {{0, 1, 2}}), {0, 1, 3}), InvalidInput);
}

TEST_CASE("remove vertices") {
    const auto h = triples(6, {{0, 1, 2}});
    CHECK(remove_vertices(h, VertexSet(6, {3})) == h);
    CHECK(remove_vertices(h, VertexSet(6, {0})).empty());
    CHECK(remove_vertices(triples(6, {{0, 1, 2}, {3, 4, 5}}), VertexSet(6, {0, 3})).empty());
    CHECK(remove_vertices(h, VertexSet(6, {0})).order() == 6);
}

TEST_CASE("linearity") {
    CHECK(is_linear(triples(5, {{0, 1, 2}, {2, 3, 4}})));
    CHECK_FALSE(is_linear(triples(4, {{0, 1, 2}, {0, 1, 3}})));
    CHECK(is_linear(triples(0, {})));
}

TEST_CASE("core invariants on random triple systems") {
    std::mt19937_64 rng(20240611);
    for (int round = 0; round < 60; ++round) {
        const int n = 4 + round % 8;
        const auto h = random_triples(rng, n, 0.05 + 0.01 * (round % 30));
        const auto s = shadow(h);

        long long total = 0;
        int max_codegree = 0;
        for (const Edge& e : s.edges()) {
            total += codegree(h, e.u, e.v);
            max_codegree = std::max(max_codegree, codegree(h, e.u, e.v));
        }
        CHECK(total == 3 * static_cast<long long>(h.size()));
        CHECK(s.size() <= 3 * h.size());

        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = x + 1; y < n; ++y) {
                CHECK((codegree(h, x, y) > 0) == s.has_edge(x, y));
                CHECK(neighborhood(h, {x, y}).count() == static_cast<std::size_t>(codegree(h, x, y)));
            }
        }
        CHECK(is_linear(h) == (h.empty() || max_codegree == 1));

        CHECK(remove_vertices(h, VertexSet(static_cast<std::size_t>(n))) == h);
        VertexSet grow(static_cast<std::size_t>(n));
        std::size_t previous = h.size();
        for (Vertex v = 0; v < n; ++v) {
            grow.set(v);
            const auto r = remove_vertices(h, grow);
            CHECK(r.size() <= previous);
            previous = r.size();
        }
    }
}

TEST_CASE("text and JSON formats") {
    std::istringstream g_in("4 3\n0 1\n1 2\n2 3\n");
    const Graph g = read_graph_text(g_in);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    std::ostringstream g_out;
    write_graph_text(g_out, g);
    CHECK(g_out.str() == "4 3\n0 1\n1 2\n2 3\n");

    std::istringstream h_in("5 2\n2 1 0\n0 3 4\n");
    const TripleSystem h = read_triples_text(h_in);
    std::ostringstream h_out;
    write_triples_text(h_out, h);
    CHECK(h_out.str() == "5 2\n0 1 2\n0 3 4\n");

    const nlohmann::json j = h;
    CHECK(j.dump() == R"({"edges":[[0,1,2],[0,3,4]],"n":5})");
    CHECK(j.get<TripleSystem>() == h);
    CHECK(nlohmann::json(g).get<Graph>() == g);

    std::istringstream short_file("3 2\n0 1\n");
    CHECK_THROWS_AS((void)read_graph_text(short_file), InvalidInput);
    std::istringstream trailing("3 1\n0 1\n1 2\n");
    CHECK_THROWS_AS((void)read_graph_text(trailing), InvalidInput);
    std::istringstream bad_triple("3 1\n0 1 1\n");
    CHECK_THROWS_AS((void)read_triples_text(bad_triple), InvalidInput);
    CHECK_THROWS_AS((void)nlohmann::json::parse(R"({"n":3,"edges":[[0,1]]})").get<TripleSystem>(), InvalidInput);
}
