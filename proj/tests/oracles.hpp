#pragma once

// Brute-force reference implementations. They only use the plain data
// accessors of Graph / TripleSystem and enumerate everything, so they stay
// independent of the search code they are compared against.

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tripex/core.hpp"

namespace oracle {

using tripex::Edge;
using tripex::Graph;
using tripex::Triple;
using tripex::TripleSystem;
using tripex::Vertex;

inline bool has_triple(const std::vector<Triple>& edges, Vertex x, Vertex y, Vertex z) {
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    const Triple t{v[0], v[1], v[2]};
    return std::find(edges.begin(), edges.end(), t) != edges.end();
}

/// Minimum crosscut size by enumerating every vertex subset of the support.
inline std::optional<int> sigma_hypergraph(const TripleSystem& f) {
    std::vector<Vertex> support;
    for (const Triple& t : f.edges())
        for (Vertex v : {t.a, t.b, t.c})
            if (std::find(support.begin(), support.end(), v) == support.end()) support.push_back(v);
    const std::size_t k = support.size();
    std::optional<int> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::set<Vertex> x;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1U) x.insert(support[i]);
        bool ok = true;
        for (const Triple& t : f.edges()) {
            const int hits = static_cast<int>(x.count(t.a) + x.count(t.b) + x.count(t.c));
            if (hits != 1) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || static_cast<int>(x.size()) < *best)) best = static_cast<int>(x.size());
    }
    return best;
}

/// min |I| + |G - I| over all independent sets, by subset enumeration.
inline int sigma_expansion(const Graph& g) {
    const int n = g.order();
    int best = static_cast<int>(g.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool independent = true;
        int uncovered = 0;
        for (const Edge& e : g.edges()) {
            const bool a = mask >> e.u & 1U;
            const bool b = mask >> e.v & 1U;
            if (a && b) independent = false;
            if (!a && !b) ++uncovered;
        }
        if (independent) best = std::min(best, std::popcount(mask) + uncovered);
    }
    return best;
}

/// Every injective map from the vertices spanned by F into V(H), checked edge by edge.
inline bool contains(const TripleSystem& h, const TripleSystem& f) {
    std::vector<Vertex> fv;
    for (const Triple& t : f.edges())
        for (Vertex v : {t.a, t.b, t.c})
            if (std::find(fv.begin(), fv.end(), v) == fv.end()) fv.push_back(v);
    if (f.edges().empty()) return true;
    const int n = h.order();
    if (static_cast<int>(fv.size()) > n) return false;
    std::vector<Vertex> image(static_cast<std::size_t>(f.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    // Plain recursive enumeration of injections, edges checked only at the leaves.
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == fv.size()) {
            for (const Triple& t : f.edges()) {
                if (!has_triple(h.edges(), image[static_cast<std::size_t>(t.a)], image[static_cast<std::size_t>(t.b)],
                                image[static_cast<std::size_t>(t.c)]))
                    return false;
            }
            return true;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            image[static_cast<std::size_t>(fv[i])] = w;
            if (go(i + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return go(0);
}

inline std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back(Triple{a, b, c});
    return out;
}

/// ex_3(n, F) by checking every family of triples on n vertices.
inline int turan_number(int n, const TripleSystem& f) {
    const auto triples = all_triples(n);
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<Triple> edges;
        for (std::size_t i = 0; i < triples.size(); ++i)
            if (mask >> i & 1U) edges.push_back(triples[i]);
        if (!contains(TripleSystem(n, edges), f)) best = size;
    }
    return best;
}

inline std::vector<std::vector<Vertex>> subsets(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1U) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

/// Is there a K_{t,t} in g whose vertices miss lists[e] for each of its edges?
inline bool has_biclique_avoiding(const Graph& g, const std::map<Edge, std::vector<Vertex>>& lists, int t) {
    const auto sides = subsets(g.order(), t);
    for (const auto& x : sides) {
        for (const auto& y : sides) {
            std::vector<Vertex> all(x);
            all.insert(all.end(), y.begin(), y.end());
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
            bool ok = true;
            for (Vertex a : x) {
                for (Vertex b : y) {
                    const Edge e{std::min(a, b), std::max(a, b)};
                    if (std::find(g.edges().begin(), g.edges().end(), e) == g.edges().end()) {
                        ok = false;
                        continue;
                    }
                    for (Vertex z : lists.at(e))
                        if (std::binary_search(all.begin(), all.end(), z)) ok = false;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

inline long long choose(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
