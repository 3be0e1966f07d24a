#include "tripex/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tripex {

namespace {

struct Header {
    long long n = 0;
    long long m = 0;
};

Header read_header(std::istream& in, const char* what) {
    Header h;
    if (!(in >> h.n >> h.m)) throw InvalidInput(std::string(what) + ": missing \"n m\" header");
    if (h.n < 0 || h.m < 0) throw InvalidInput(std::string(what) + ": negative header value");
    if (h.n > std::numeric_limits<int>::max()) throw InvalidInput(std::string(what) + ": n too large");
    return h;
}

void expect_end(std::istream& in, const char* what) {
    std::string rest;
    if (in >> rest) throw InvalidInput(std::string(what) + ": trailing data after the declared edges");
}

bool looks_like_json(std::istream& in) {
    in >> std::ws;
    return in.peek() == '{';
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return in;
}

nlohmann::json parse_json(std::istream& in, const std::string& path) {
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

}  // namespace

Graph read_graph_text(std::istream& in) {
    const Header h = read_header(in, "graph");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(h.m));
    for (long long i = 0; i < h.m; ++i) {
        Vertex u = 0;
        Vertex v = 0;
        if (!(in >> u >> v)) throw InvalidInput("graph: expected " + std::to_string(h.m) + " edge lines");
        edges.push_back(Edge{u, v});
    }
    expect_end(in, "graph");
    return Graph(static_cast<int>(h.n), std::move(edges));
}

TripleSystem read_triples_text(std::istream& in) {
    const Header h = read_header(in, "triple system");
    std::vector<Triple> edges;
    edges.reserve(static_cast<std::size_t>(h.m));
    for (long long i = 0; i < h.m; ++i) {
        Vertex a = 0;
        Vertex b = 0;
        Vertex c = 0;
        if (!(in >> a >> b >> c))
            throw InvalidInput("triple system: expected " + std::to_string(h.m) + " triple lines");
        edges.push_back(Triple{a, b, c});
    }
    expect_end(in, "triple system");
    return TripleSystem(static_cast<int>(h.n), std::move(edges));
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_triples_text(std::ostream& out, const TripleSystem& h) {
    out << h.order() << ' ' << h.size() << '\n';
    for (const Triple& t : h.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

Graph load_graph(const std::string& path) {
    auto in = open(path);
    if (looks_like_json(in)) return parse_json(in, path).get<Graph>();
    return read_graph_text(in);
}

TripleSystem load_triples(const std::string& path) {
    auto in = open(path);
    if (looks_like_json(in)) return parse_json(in, path).get<TripleSystem>();
    return read_triples_text(in);
}

nlohmann::json load_json(const std::string& path) {
    auto in = open(path);
    return parse_json(in, path);
}

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }

void to_json(nlohmann::json& j, const Triple& t) { j = nlohmann::json::array({t.a, t.b, t.c}); }

void to_json(nlohmann::json& j, const Graph& g) { j = {{"n", g.order()}, {"edges", g.edges()}}; }

void to_json(nlohmann::json& j, const TripleSystem& h) { j = {{"n", h.order()}, {"edges", h.edges()}}; }

void to_json(nlohmann::json& j, const VertexSet& s) { j = s.members(); }

void from_json(const nlohmann::json& j, Graph& g) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("graph JSON: every edge needs 2 vertices");
            edges.push_back(Edge{e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        g = Graph(j.at("n").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
}

void from_json(const nlohmann::json& j, TripleSystem& h) {
    try {
        std::vector<Triple> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw InvalidInput("triple system JSON: every edge needs 3 vertices");
            edges.push_back(Triple{e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Vertex>()});
        }
        h = TripleSystem(j.at("n").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("triple system JSON: ") + e.what());
    }
}

}  // namespace tripex
