#include "tripex/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tripex {

namespace {

const std::vector<Vertex> kNoVertices;

void check_vertex(int n, Vertex v, const char* what) {
    if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << what << ": vertex " << v << " out of range [0, " << n << ")";
        throw InvalidInput(msg.str());
    }
}

}  // namespace

Edge Edge::make(Vertex x, Vertex y) {
    if (x == y) throw InvalidInput("edge has a loop at vertex " + std::to_string(x));
    return x < y ? Edge{x, y} : Edge{y, x};
}

Triple Triple::make(Vertex x, Vertex y, Vertex z) {
    if (x == y || x == z || y == z) {
        throw InvalidInput("triple {" + std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(z) + "} has a repeated vertex");
    }
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return Triple{v[0], v[1], v[2]};
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string to_string(const Triple& t) {
    return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw InvalidInput("graph vertex count is negative");
    for (Edge& e : edges) {
        check_vertex(n, e.u, "graph");
        check_vertex(n, e.v, "graph");
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidInput("duplicate graph edge " + to_string(*dup));
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex x, Vertex y) const { return edge_index(x, y) >= 0; }

std::ptrdiff_t Graph::edge_index(Vertex x, Vertex y) const {
    if (x == y || x < 0 || y < 0 || x >= n_ || y >= n_) return -1;
    const Edge e = Edge::make(x, y);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return it - edges_.begin();
}

VertexSet Graph::neighbor_set(Vertex v) const {
    return VertexSet::from_members(static_cast<std::size_t>(n_), neighbors(v));
}

// ---------------------------------------------------------------------------
// TripleSystem

TripleSystem::TripleSystem(int n, std::vector<Triple> edges)
    : n_(n), degree_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0) throw InvalidInput("triple system vertex count is negative");
    for (Triple& t : edges) {
        check_vertex(n, t.a, "triple system");
        check_vertex(n, t.b, "triple system");
        check_vertex(n, t.c, "triple system");
        t = Triple::make(t.a, t.b, t.c);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidInput("duplicate triple " + to_string(*dup));
    edges_ = std::move(edges);
    keys_.reserve(edges_.size());
    for (const Triple& t : edges_) {
        keys_.insert(triple_key(t));
        for (Vertex v : t.vertices()) ++degree_[static_cast<std::size_t>(v)];
        link_[pair_key(t.a, t.b)].push_back(t.c);
        link_[pair_key(t.a, t.c)].push_back(t.b);
        link_[pair_key(t.b, t.c)].push_back(t.a);
    }
    for (auto& [key, thirds] : link_) std::sort(thirds.begin(), thirds.end());
}

std::uint64_t TripleSystem::pair_key(Vertex x, Vertex y) const noexcept {
    if (x > y) std::swap(x, y);
    return static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(y);
}

std::uint64_t TripleSystem::triple_key(const Triple& t) const noexcept {
    const auto n = static_cast<std::uint64_t>(n_);
    return (static_cast<std::uint64_t>(t.a) * n + static_cast<std::uint64_t>(t.b)) * n +
           static_cast<std::uint64_t>(t.c);
}

bool TripleSystem::has_edge(const Triple& t) const {
    if (t.a < 0 || t.c >= n_ || !(t.a < t.b && t.b < t.c)) return false;
    return keys_.contains(triple_key(t));
}

const std::vector<Vertex>& TripleSystem::third_vertices(Vertex x, Vertex y) const {
    if (x == y || x < 0 || y < 0 || x >= n_ || y >= n_) return kNoVertices;
    auto it = link_.find(pair_key(x, y));
    return it == link_.end() ? kNoVertices : it->second;
}

VertexSet TripleSystem::support() const {
    VertexSet s(static_cast<std::size_t>(n_));
    for (const Triple& t : edges_)
        for (Vertex v : t.vertices()) s.set(v);
    return s;
}

// ---------------------------------------------------------------------------
// Derived quantities

ShadowGraph shadow(const TripleSystem& h) {
    std::vector<Edge> pairs;
    pairs.reserve(3 * h.size());
    for (const Triple& t : h.edges())
        for (const Edge& e : t.pairs()) pairs.push_back(e);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Graph(h.order(), std::move(pairs));
}

int codegree(const TripleSystem& h, Vertex x, Vertex y) {
    check_vertex(h.order(), x, "codegree");
    check_vertex(h.order(), y, "codegree");
    if (x == y) throw InvalidInput("codegree needs two distinct vertices");
    return static_cast<int>(h.third_vertices(x, y).size());
}

VertexSet neighborhood(const TripleSystem& h, const std::vector<Vertex>& s) {
    if (s.size() != 2) throw InvalidInput("neighborhood is defined for vertex pairs only");
    check_vertex(h.order(), s[0], "neighborhood");
    check_vertex(h.order(), s[1], "neighborhood");
    if (s[0] == s[1]) throw InvalidInput("neighborhood needs two distinct vertices");
    return VertexSet::from_members(static_cast<std::size_t>(h.order()), h.third_vertices(s[0], s[1]));
}

CodegreeExtremes edge_codegree_extremes(const TripleSystem& h, const Triple& e) {
    if (!h.has_edge(e)) throw InvalidInput("triple " + to_string(e) + " is not an edge");
    CodegreeExtremes out{std::numeric_limits<int>::max(), 0};
    for (const Edge& p : e.pairs()) {
        const int d = static_cast<int>(h.third_vertices(p.u, p.v).size());
        out.min = std::min(out.min, d);
        out.max = std::max(out.max, d);
    }
    return out;
}

TripleSystem remove_vertices(const TripleSystem& h, const VertexSet& x) {
    std::vector<Triple> kept;
    for (const Triple& t : h.edges())
        if (!x.test(t.a) && !x.test(t.b) && !x.test(t.c)) kept.push_back(t);
    return TripleSystem(h.order(), std::move(kept));
}

bool is_linear(const TripleSystem& h) {
    for (const Triple& t : h.edges())
        for (const Edge& p : t.pairs())
            if (h.third_vertices(p.u, p.v).size() > 1) return false;
    return true;
}

}  // namespace tripex
