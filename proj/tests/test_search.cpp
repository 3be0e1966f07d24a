#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tripex/search.hpp"
#include "tripex/structure.hpp"
#include "tripex/trees.hpp"

using namespace tripex;

namespace {

TripleSystem random_triples(std::mt19937_64& rng, int n, double p) {
    std::vector<Triple> edges;
    std::bernoulli_distribution keep(p);
    for (const Triple& t : oracle::all_triples(n))
        if (keep(rng)) edges.push_back(t);
    return TripleSystem(n, std::move(edges));
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> edges;
    std::bernoulli_distribution keep(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (keep(rng)) edges.push_back(Edge{u, v});
    return Graph(n, std::move(edges));
}

const TripleSystem p2_plus = expand(path_graph(3)).triples;

}  // namespace

TEST_CASE("containment examples") {
    const TripleSystem one(3, {{0, 1, 2}});
    const auto found = contains(TripleSystem(5, {{1, 3, 4}}), one);
    REQUIRE(found);
    CHECK(verify_embedding(TripleSystem(5, {{1, 3, 4}}), one, *found));
    CHECK(found->kind == EmbeddingKind::Subhypergraph);

    CHECK_FALSE(contains(TripleSystem(4, {{0, 1, 2}, {0, 1, 3}}), p2_plus));

    const TripleSystem fan(5, {{0, 1, 2}, {0, 3, 4}});
    const auto centre = contains(fan, p2_plus);
    REQUIRE(centre);
    // p2_plus = {0,1,3},{1,2,4}: vertex 1 is the centre.
    const auto it = std::find_if(centre->map.begin(), centre->map.end(), [](auto p) { return p.first == 1; });
    REQUIRE(it != centre->map.end());
    CHECK(it->second == 0);

    CHECK(contains(TripleSystem(3, {}), TripleSystem(3, {})));
    CHECK_FALSE(contains(TripleSystem(3, {}), one));
}

TEST_CASE("containment agrees with the injection oracle") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 300; ++round) {
        const int fn = 3 + round % 4;
        const int hn = 4 + round % 4;
        const auto f = random_triples(rng, fn, 0.25);
        const auto h = random_triples(rng, hn, 0.3 + 0.05 * (round % 8));
        const auto got = contains(h, f);
        CHECK(got.has_value() == oracle::contains(h, f));
        if (got) CHECK(verify_embedding(h, f, *got));
    }
}

TEST_CASE("expansion containment agrees with plain containment") {
    std::mt19937_64 rng(505);
    for (int round = 0; round < 300; ++round) {
        const auto g = random_graph(rng, 2 + round % 4, 0.5);
        const auto h = random_triples(rng, 5 + round % 3, 0.2 + 0.05 * (round % 10));
        const auto via_shadow = contains_expansion(h, g);
        const auto plus = expand(g).triples;
        CHECK(via_shadow.has_value() == contains(h, plus).has_value());
        if (via_shadow) {
            CHECK(via_shadow->kind == EmbeddingKind::Expansion);
            CHECK(verify_embedding(h, plus, *via_shadow));
        }
    }
    CHECK(contains_expansion(TripleSystem(3, {{0, 1, 2}}), Graph(2, {{0, 1}})));
}

TEST_CASE("lower bound construction") {
    CHECK(lower_bound_construction(6, 1).size() == 10);
    CHECK(lower_bound_construction(5, 0).empty());
    CHECK(lower_bound_construction(6, 2).size() == 12);
    CHECK_THROWS_AS((void)lower_bound_construction(4, 5), InvalidInput);

    for (int n = 3; n <= 9; ++n) {
        for (int c = 0; c <= n; ++c) {
            const auto h = lower_bound_construction(n, c);
            CHECK(static_cast<long long>(h.size()) == c * oracle::choose(n - c, 2));
            for (const Triple& t : h.edges()) CHECK((t.a < c) + (t.b < c) + (t.c < c) == 1);
        }
    }
}

TEST_CASE("constructions avoid every tree expansion with larger sigma") {
    for (int k = 2; k <= 6; ++k) {
        for (const auto& t : nonisomorphic_trees(k)) {
            const int sigma = sigma_expansion(t).sigma;
            for (int n = std::max(3, k); n <= 8; ++n) {
                const auto h = lower_bound_construction(n, sigma - 1);
                CHECK_FALSE(contains_expansion(h, t));
                if (n <= 6) CHECK_FALSE(oracle::contains(h, expand(t).triples));
            }
        }
    }
    // The path with 3 edges (sigma 2) fits once the core has two vertices.
    CHECK(contains_expansion(lower_bound_construction(7, 2), path_graph(4)));
}

TEST_CASE("turan number examples") {
    const auto single = turan_number(5, TripleSystem(3, {{0, 1, 2}}));
    CHECK(single.value == 0);
    CHECK(single.exact);

    const auto four = turan_number(4, p2_plus);
    CHECK(four.value == 4);
    CHECK(four.exact);

    const auto five = turan_number(5, p2_plus);
    CHECK(five.exact);
    CHECK(five.value == oracle::turan_number(5, p2_plus));
    CHECK_FALSE(contains(five.witness, p2_plus));
    CHECK(static_cast<int>(five.witness.size()) == five.value);

    CHECK_THROWS_AS((void)turan_number(2, p2_plus), InvalidInput);
    CHECK_THROWS_AS((void)turan_number(5, TripleSystem(3, {})), InvalidInput);
}

TEST_CASE("turan number against the exhaustive oracle") {
    // Small forbidden systems on up to 5 vertices, host sizes 4 and 5.
    const std::vector<TripleSystem> forbidden{
        TripleSystem(4, {{0, 1, 2}, {0, 1, 3}}),
        TripleSystem(5, {{0, 1, 2}, {2, 3, 4}}),
        TripleSystem(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}),
        TripleSystem(6, {{0, 1, 2}, {3, 4, 5}}),
        expand(star_graph(2)).triples,
    };
    for (const auto& f : forbidden) {
        for (int n = 4; n <= 5; ++n) {
            const auto res = turan_number(n, f);
            CHECK(res.exact);
            CHECK(res.value == oracle::turan_number(n, f));
        }
    }
}

TEST_CASE("turan number is monotone, deterministic across workers, and honours budgets") {
    int previous = 0;
    for (int n = 3; n <= 6; ++n) {
        const auto one = turan_number(n, p2_plus, {}, 1);
        const auto many = turan_number(n, p2_plus, {}, 4);
        CHECK(one.value >= previous);
        CHECK(one.value == many.value);
        CHECK(one.witness.edges() == many.witness.edges());
        previous = one.value;
    }

    const auto p4_plus = expand(path_graph(4)).triples;
    const auto full = turan_number(6, p4_plus);
    CHECK(full.exact);
    CHECK(full.value >= 10);  // lower bound construction with a core of one vertex

    Budget tiny;
    tiny.nodes = 3;
    const auto cut = turan_number(6, p4_plus, tiny);
    CHECK_FALSE(cut.exact);
    CHECK(cut.value <= full.value);
    CHECK_FALSE(contains(cut.witness, p4_plus));
}

TEST_CASE("theorem 1 audit") {
    const auto p2 = audit_theorem1(path_graph(3), {4, 5});
    CHECK(p2.sigma == 1);
    REQUIRE(p2.rows.size() == 2);
    CHECK(p2.rows[0].bound == 0);
    REQUIRE(p2.rows[0].exact);
    CHECK(p2.rows[0].exact->value == 4);
    CHECK_FALSE(p2.rows[0].ratio);
    CHECK(p2.all_pass());

    const auto p4 = audit_theorem1(path_graph(4), {6}, {}, 5);
    CHECK(p4.sigma == 2);
    CHECK(p4.rows[0].bound == 10);
    CHECK(p4.rows[0].construction_free);
    CHECK_FALSE(p4.rows[0].exact);

    const auto star = audit_theorem1(star_graph(3), {6});
    CHECK(star.sigma == 1);
    REQUIRE(star.rows[0].exact);
    CHECK(star.rows[0].exact->exact);
    CHECK(star.all_pass());

    CHECK_THROWS_AS((void)audit_theorem1(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), {5}), InvalidInput);
}

TEST_CASE("jump audit") {
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto k22 = audit_jump(c4, 7);
    CHECK(k22.sigma == 2);
    CHECK(k22.construction == "star");
    CHECK(k22.expected_edges == 15);
    CHECK(k22.free);
    CHECK(k22.two_vertex_cover);
    CHECK(k22.pass());

    const auto p4 = audit_jump(path_graph(4), 6);
    CHECK(p4.sigma == 2);
    CHECK(p4.family->size() == 10);
    CHECK(p4.free);
    CHECK(p4.star_plus_edge);

    const auto p6 = audit_jump(path_graph(6), 7);
    CHECK(p6.sigma == 3);
    CHECK(p6.construction == "core-2");
    CHECK(p6.family->size() == 20);
    CHECK(p6.free);
    CHECK(p6.pass());

    const auto small = audit_jump(star_graph(3), 5);
    CHECK(small.construction == "none");
}
