#include "tripex/extraction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tripex {

// ---------------------------------------------------------------------------
// Full subgraphs

bool is_full(const TripleSystem& h, int d) {
    for (const Triple& t : h.edges())
        for (const Edge& p : t.pairs())
            if (static_cast<int>(h.third_vertices(p.u, p.v).size()) < d) return false;
    return true;
}

TripleSystem full_subgraph(const TripleSystem& h, int d) {
    if (d < 1) throw InvalidInput("full_subgraph needs d >= 1");
    std::vector<Triple> current = h.edges();
    for (;;) {
        std::map<Edge, int> codeg;
        for (const Triple& t : current)
            for (const Edge& p : t.pairs()) ++codeg[p];
        auto sparse = std::find_if(codeg.begin(), codeg.end(), [d](const auto& kv) { return kv.second <= d; });
        if (sparse == codeg.end()) break;
        const Edge pair = sparse->first;
        std::erase_if(current, [&](const Triple& t) { return t.contains(pair); });
    }
    return TripleSystem(h.order(), std::move(current));
}

// ---------------------------------------------------------------------------
// Sunflowers

SetFamily::SetFamily(std::vector<std::vector<Vertex>> sets, int k, bool allow_duplicates) : k_(k) {
    if (k < 0) throw InvalidInput("set family needs k >= 0");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInput("set family member has a repeated element");
        if (static_cast<int>(s.size()) > k)
            throw InvalidInput("set family member has " + std::to_string(s.size()) + " > k elements");
        if (!s.empty() && s.front() < 0) throw InvalidInput("set family elements must be non-negative");
    }
    if (!allow_duplicates) {
        std::set<std::vector<Vertex>> seen;
        for (const auto& s : sets)
            if (!seen.insert(s).second) throw InvalidInput("set family has a duplicate member");
    }
    sets_ = std::move(sets);
}

std::int64_t sunflower_threshold(int k, int s) {
    if (k < 0 || s < 1) throw InvalidInput("sunflower threshold needs k >= 0 and s >= 1");
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t value = 1;
    auto mul = [&](std::int64_t f) {
        if (f != 0 && value > kMax / f) {
            value = kMax;
        } else {
            value *= f;
        }
    };
    for (int i = 2; i <= k; ++i) mul(i);
    for (int i = 0; i < k; ++i) mul(s - 1);
    return value;
}

namespace {

using Residual = std::vector<std::pair<std::size_t, std::vector<Vertex>>>;

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> sunflower_petals(const Residual& family, std::size_t s) {
    if (family.size() < s) return std::nullopt;

    std::vector<std::size_t> chosen;
    std::vector<Vertex> used;
    for (const auto& [idx, set] : family) {
        if (!disjoint(set, used)) continue;
        chosen.push_back(idx);
        used.insert(used.end(), set.begin(), set.end());
        std::sort(used.begin(), used.end());
        if (chosen.size() == s) return chosen;
    }

    std::map<Vertex, std::size_t> frequency;
    for (const auto& [idx, set] : family)
        for (Vertex v : set) ++frequency[v];
    Vertex popular = -1;
    std::size_t best = 0;
    for (const auto& [v, f] : frequency) {
        if (f > best) {
            best = f;
            popular = v;
        }
    }
    if (best < s) return std::nullopt;

    Residual link;
    for (const auto& [idx, set] : family) {
        if (!std::binary_search(set.begin(), set.end(), popular)) continue;
        std::vector<Vertex> rest;
        std::copy_if(set.begin(), set.end(), std::back_inserter(rest), [popular](Vertex v) { return v != popular; });
        link.emplace_back(idx, std::move(rest));
    }
    return sunflower_petals(link, s);
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& family, int s) {
    if (s < 1) throw InvalidInput("find_sunflower needs s >= 1");
    Residual all;
    all.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) all.emplace_back(i, family.sets()[i]);
    auto petals = sunflower_petals(all, static_cast<std::size_t>(s));
    if (!petals) return std::nullopt;

    Sunflower out;
    out.petals = std::move(*petals);
    out.core = family.sets()[out.petals.front()];
    for (std::size_t idx : out.petals) out.core = intersect(out.core, family.sets()[idx]);
    return out;
}

bool is_sunflower(const SetFamily& family, const Sunflower& flower) {
    std::set<std::size_t> distinct(flower.petals.begin(), flower.petals.end());
    if (distinct.size() != flower.petals.size()) return false;
    for (std::size_t idx : flower.petals)
        if (idx >= family.size()) return false;
    for (std::size_t i = 0; i < flower.petals.size(); ++i) {
        for (std::size_t j = i + 1; j < flower.petals.size(); ++j) {
            if (intersect(family.sets()[flower.petals[i]], family.sets()[flower.petals[j]]) != flower.core)
                return false;
        }
    }
    if (flower.petals.size() == 1) return family.sets()[flower.petals.front()] == flower.core;
    return true;
}

// ---------------------------------------------------------------------------
// Disjoint augmented sets

AugmentedFamily::AugmentedFamily(std::vector<Member> members) {
    std::unordered_set<Vertex> in_sets;
    std::unordered_set<Vertex> extras;
    for (auto& [set, extra] : members) {
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw InvalidInput("augmented family set has a repeated element");
        for (Vertex v : set)
            if (!in_sets.insert(v).second) throw InvalidInput("augmented family sets are not pairwise disjoint");
        if (!extras.insert(extra).second) throw InvalidInput("augmented family extra elements are not distinct");
    }
    members_ = std::move(members);
}

std::vector<std::size_t> select_disjoint_augmented(const AugmentedFamily& family) {
    const std::size_t m = family.size();
    if (m == 0) return {};

    std::unordered_map<Vertex, std::size_t> owner;
    for (std::size_t i = 0; i < m; ++i)
        for (Vertex v : family.members()[i].first) owner.emplace(v, i);

    // Underlying undirected graph of the conflict digraph.
    std::vector<std::set<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = owner.find(family.members()[i].second);
        if (it == owner.end() || it->second == i) continue;
        adj[i].insert(it->second);
        adj[it->second].insert(i);
    }

    // Every subgraph of a graph with out-degree <= 1 orientation has a vertex of
    // degree <= 2; peel such vertices and colour in reverse.
    std::vector<std::size_t> degree(m);
    for (std::size_t i = 0; i < m; ++i) degree[i] = adj[i].size();
    std::vector<char> removed(m, 0);
    std::vector<std::size_t> peel;
    peel.reserve(m);
    std::set<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < m; ++i) queue.emplace(degree[i], i);
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        if (d > 2) throw std::logic_error("conflict graph is not 2-degenerate");
        removed[v] = 1;
        peel.push_back(v);
        for (std::size_t w : adj[v]) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            --degree[w];
            queue.emplace(degree[w], w);
        }
    }

    std::vector<int> colour(m, -1);
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        std::array<bool, 3> taken{false, false, false};
        for (std::size_t w : adj[*it])
            if (colour[w] >= 0) taken[static_cast<std::size_t>(colour[w])] = true;
        int c = 0;
        while (c < 3 && taken[static_cast<std::size_t>(c)]) ++c;
        if (c == 3) throw std::logic_error("greedy colouring needed a fourth colour");
        colour[*it] = c;
    }

    std::array<std::vector<std::size_t>, 3> classes;
    for (std::size_t i = 0; i < m; ++i) classes[static_cast<std::size_t>(colour[i])].push_back(i);
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c)
        if (classes[c].size() > classes[best].size()) best = c;
    return classes[best];
}

// ---------------------------------------------------------------------------
// Bicliques avoiding lists

namespace {

class BicliqueSearch {
public:
    BicliqueSearch(const Graph& f, const EdgeLists& lists, int t) : f_(f), lists_(lists), t_(static_cast<std::size_t>(t)) {}

    std::optional<Biclique> run() {
        for (Vertex v = 0; v < f_.order(); ++v) {
            if (static_cast<std::size_t>(f_.degree(v)) < t_) continue;
            left_.push_back(v);
            if (extend_left(f_.neighbor_set(v))) return Biclique{left_, right_};
            left_.pop_back();
        }
        return std::nullopt;
    }

private:
    const std::vector<Vertex>& list(Vertex x, Vertex y) const { return lists_.at(Edge::make(x, y)); }

    bool in_grid(Vertex v) const {
        return std::find(left_.begin(), left_.end(), v) != left_.end() ||
               std::find(right_.begin(), right_.end(), v) != right_.end();
    }

    bool extend_left(const VertexSet& common) {
        VertexSet candidates = common;
        for (Vertex x : left_) candidates.reset(x);
        if (candidates.count() < t_) return false;
        if (left_.size() == t_) return extend_right(candidates);
        for (Vertex v = left_.back() + 1; v < f_.order(); ++v) {
            if (static_cast<std::size_t>(f_.degree(v)) < t_) continue;
            left_.push_back(v);
            if (extend_left(common & f_.neighbor_set(v))) return true;
            left_.pop_back();
        }
        return false;
    }

    // Can y join the right side given the vertices already placed?
    bool compatible(Vertex y) const {
        for (Vertex x : left_) {
            for (Vertex z : list(x, y))
                if (z == y || in_grid(z)) return false;
        }
        for (Vertex x : left_)
            for (Vertex y2 : right_)
                for (Vertex z : list(x, y2))
                    if (z == y) return false;
        return true;
    }

    bool extend_right(const VertexSet& candidates) {
        if (right_.size() == t_) return true;
        const Vertex from = right_.empty() ? left_.front() + 1 : right_.back() + 1;
        for (Vertex y = from; y < f_.order(); ++y) {
            if (!candidates.test(y) || !compatible(y)) continue;
            right_.push_back(y);
            if (extend_right(candidates)) return true;
            right_.pop_back();
        }
        return false;
    }

    const Graph& f_;
    const EdgeLists& lists_;
    std::size_t t_;
    std::vector<Vertex> left_;
    std::vector<Vertex> right_;
};

}  // namespace

std::optional<Biclique> find_biclique_avoiding_lists(const Graph& f, const EdgeLists& lists, int t,
                                                     const TripleSystem& h) {
    if (t < 1) throw InvalidInput("find_biclique_avoiding_lists needs t >= 1");
    if (f.order() > h.order()) throw InvalidInput("graph has more vertices than the host triple system");
    for (const Edge& e : f.edges()) {
        if (h.third_vertices(e.u, e.v).empty())
            throw InvalidInput("edge " + to_string(e) + " is not in the shadow of the host");
        if (!lists.contains(e)) throw InvalidInput("edge " + to_string(e) + " has no list");
    }
    return BicliqueSearch(f, lists, t).run();
}

Graph random_list_filter(const Graph& f, const EdgeLists& lists, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<char> sample(static_cast<std::size_t>(f.order()), 0);
    for (auto& s : sample) s = coin(rng) ? 1 : 0;
    std::vector<Edge> kept;
    for (const Edge& e : f.edges()) {
        if (!sample[static_cast<std::size_t>(e.u)] || !sample[static_cast<std::size_t>(e.v)]) continue;
        auto it = lists.find(e);
        bool clear = true;
        if (it != lists.end()) {
            for (Vertex z : it->second)
                if (z >= 0 && z < f.order() && sample[static_cast<std::size_t>(z)]) clear = false;
        }
        if (clear) kept.push_back(e);
    }
    return Graph(f.order(), std::move(kept));
}

}  // namespace tripex
