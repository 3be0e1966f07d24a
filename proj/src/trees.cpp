#include "tripex/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace tripex {

namespace {

// AHU encoding of the component rooted at `root`.
std::string rooted_code(const Graph& g, Vertex root, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : g.neighbors(root))
        if (w != parent) children.push_back(rooted_code(g, w, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

// Centre(s) of a tree given as a vertex list of one component.
std::vector<Vertex> centres(const Graph& g, const std::vector<Vertex>& comp) {
    if (comp.size() <= 2) return comp;
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> layer;
    for (Vertex v : comp) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    std::size_t remaining = comp.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            deg[static_cast<std::size_t>(v)] = 0;
            for (Vertex w : g.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_forest(const Graph& g) {
    return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_forest(g); }

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) label[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = label[static_cast<std::size_t>(e.u)];
        const int b = label[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back(Edge::make(a, b));
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::string forest_canonical_form(const Graph& forest) {
    std::vector<std::string> codes;
    for (const auto& comp : components(forest)) {
        const auto c = centres(forest, comp);
        if (c.size() == 1) {
            codes.push_back(rooted_code(forest, c[0], -1));
        } else {
            // Bicentral: root at the central edge, order the two halves.
            std::string a = rooted_code(forest, c[0], c[1]);
            std::string b = rooted_code(forest, c[1], c[0]);
            if (b < a) std::swap(a, b);
            codes.push_back("[" + a + b + "]");
        }
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes) out += c;
    return out;
}

std::vector<Graph> nonisomorphic_trees(int k) {
    if (k < 1) return {};
    std::vector<Graph> level{Graph(1, {})};
    for (int size = 2; size <= k; ++size) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.push_back(Edge{v, t.order()});
                Graph grown(size, std::move(edges));
                if (seen.insert(forest_canonical_form(grown)).second) next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> nonisomorphic_forests(int k) {
    if (k < 0) return {};
    std::vector<Graph> level{Graph(0, {})};
    for (int size = 1; size <= k; ++size) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        auto keep = [&](Graph g) {
            if (seen.insert(forest_canonical_form(g)).second) next.push_back(std::move(g));
        };
        for (const Graph& f : level) {
            keep(Graph(size, f.edges()));
            for (Vertex v = 0; v < f.order(); ++v) {
                auto edges = f.edges();
                edges.push_back(Edge{v, f.order()});
                keep(Graph(size, std::move(edges)));
            }
        }
        level = std::move(next);
    }
    return level;
}

Graph path_graph(int k) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) edges.push_back(Edge{v, v + 1});
    return Graph(std::max(k, 0), std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back(Edge{0, v});
    return Graph(leaves + 1, std::move(edges));
}

}  // namespace tripex
