#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tripex/vertex_set.hpp"

namespace tripex {

/// Raised for malformed user input (bad files, parameters out of range,
/// objects that violate a documented invariant).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex x, Vertex y);
    [[nodiscard]] bool contains(Vertex x) const noexcept { return u == x || v == x; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered triple stored with a < b < c.
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    static Triple make(Vertex x, Vertex y, Vertex z);
    [[nodiscard]] bool contains(Vertex x) const noexcept { return a == x || b == x || c == x; }
    [[nodiscard]] bool contains(const Edge& e) const noexcept { return contains(e.u) && contains(e.v); }
    /// The three pairs in lexicographic order: ab, ac, bc.
    [[nodiscard]] std::array<Edge, 3> pairs() const noexcept {
        return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
    }
    [[nodiscard]] std::array<Vertex, 3> vertices() const noexcept { return {a, b, c}; }
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Simple undirected graph on vertices 0..n-1, edges kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] bool has_edge(Vertex x, Vertex y) const;
    /// Position of edge xy in edges(), or -1.
    [[nodiscard]] std::ptrdiff_t edge_index(Vertex x, Vertex y) const;
    [[nodiscard]] VertexSet neighbor_set(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

using ShadowGraph = Graph;

/// 3-uniform hypergraph on vertices 0..n-1. Isolated vertices are allowed.
class TripleSystem {
public:
    TripleSystem() = default;
    TripleSystem(int n, std::vector<Triple> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
    [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }
    [[nodiscard]] const std::vector<Triple>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool has_edge(const Triple& t) const;
    [[nodiscard]] int degree(Vertex v) const { return degree_.at(static_cast<std::size_t>(v)); }
    /// Third vertices of the triples through pair xy, sorted. Empty when xy is not a sub-edge.
    [[nodiscard]] const std::vector<Vertex>& third_vertices(Vertex x, Vertex y) const;
    /// Vertices that lie in at least one triple.
    [[nodiscard]] VertexSet support() const;

    friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    [[nodiscard]] std::uint64_t pair_key(Vertex x, Vertex y) const noexcept;
    [[nodiscard]] std::uint64_t triple_key(const Triple& t) const noexcept;

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<int> degree_;
    std::unordered_map<std::uint64_t, std::vector<Vertex>> link_;
    std::unordered_set<std::uint64_t> keys_;
};

struct CodegreeExtremes {
    int min = 0;
    int max = 0;
    friend bool operator==(const CodegreeExtremes&, const CodegreeExtremes&) = default;
};

/// Pairs covered by some triple of h.
[[nodiscard]] ShadowGraph shadow(const TripleSystem& h);

/// Number of triples containing both x and y.
[[nodiscard]] int codegree(const TripleSystem& h, Vertex x, Vertex y);

/// Third vertices of triples containing the two-element set s.
[[nodiscard]] VertexSet neighborhood(const TripleSystem& h, const std::vector<Vertex>& s);

/// Smallest and largest codegree over the three pairs of e, which must be an edge of h.
[[nodiscard]] CodegreeExtremes edge_codegree_extremes(const TripleSystem& h, const Triple& e);

/// Triples of h disjoint from x; vertex labels and n are kept.
[[nodiscard]] TripleSystem remove_vertices(const TripleSystem& h, const VertexSet& x);

[[nodiscard]] bool is_linear(const TripleSystem& h);

[[nodiscard]] std::string to_string(const Edge& e);
[[nodiscard]] std::string to_string(const Triple& t);

}  // namespace tripex

template <>
struct std::hash<tripex::Triple> {
    std::size_t operator()(const tripex::Triple& t) const noexcept {
        std::size_t h = static_cast<std::size_t>(t.a);
        h = h * 1000003U ^ static_cast<std::size_t>(t.b);
        h = h * 1000003U ^ static_cast<std::size_t>(t.c);
        return h;
    }
};
