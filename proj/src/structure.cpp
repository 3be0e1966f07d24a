#include "tripex/structure.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tripex/trees.hpp"

namespace tripex {

Vertex Expansion::enlargement_of(const Edge& e) const {
    const auto idx = base.edge_index(e.u, e.v);
    if (idx < 0) throw InvalidInput("edge " + to_string(e) + " is not in the base graph");
    return enlargement[static_cast<std::size_t>(idx)];
}

Expansion expand(const Graph& g) {
    Expansion x;
    x.base = g;
    std::vector<Triple> triples;
    triples.reserve(g.size());
    Vertex next = g.order();
    for (const Edge& e : g.edges()) {
        x.enlargement.push_back(next);
        triples.push_back(Triple::make(e.u, e.v, next));
        ++next;
    }
    x.triples = TripleSystem(next, std::move(triples));
    return x;
}

// ---------------------------------------------------------------------------
// Crosscuts of a triple system

namespace {

enum class Status : char { Free, In, Out };

class CrosscutSearch {
public:
    explicit CrosscutSearch(const TripleSystem& f)
        : f_(f),
          status_(static_cast<std::size_t>(f.order()), Status::Free),
          incident_(static_cast<std::size_t>(f.order())) {
        for (std::size_t i = 0; i < f.edges().size(); ++i)
            for (Vertex v : f.edges()[i].vertices()) incident_[static_cast<std::size_t>(v)].push_back(i);
    }

    std::optional<HypergraphSigma> run() {
        recurse(0);
        if (!best_) return std::nullopt;
        HypergraphSigma out;
        out.sigma = static_cast<int>(best_->size());
        out.witness.vertices = VertexSet::from_members(static_cast<std::size_t>(f_.order()), *best_);
        return out;
    }

private:
    Status& st(Vertex v) { return status_[static_cast<std::size_t>(v)]; }
    Status st(Vertex v) const { return status_[static_cast<std::size_t>(v)]; }

    bool satisfied(const Triple& t) const {
        return st(t.a) == Status::In || st(t.b) == Status::In || st(t.c) == Status::In;
    }

    // Greedy packing of unsatisfied triples whose free vertices are pairwise disjoint;
    // each needs its own crosscut vertex.
    int packing_bound() const {
        std::vector<char> used(status_.size(), 0);
        int bound = 0;
        for (const Triple& t : f_.edges()) {
            if (satisfied(t)) continue;
            bool clash = false;
            for (Vertex v : t.vertices())
                if (st(v) == Status::Free && used[static_cast<std::size_t>(v)]) clash = true;
            if (clash) continue;
            for (Vertex v : t.vertices())
                if (st(v) == Status::Free) used[static_cast<std::size_t>(v)] = 1;
            ++bound;
        }
        return bound;
    }

    void recurse(int chosen) {
        if (best_ && chosen + packing_bound() > static_cast<int>(best_->size())) return;

        const Triple* pick = nullptr;
        int pick_free = 4;
        for (const Triple& t : f_.edges()) {
            if (satisfied(t)) continue;
            int free = 0;
            for (Vertex v : t.vertices()) free += st(v) == Status::Free ? 1 : 0;
            if (free == 0) return;
            if (free < pick_free) {
                pick_free = free;
                pick = &t;
            }
        }
        if (pick == nullptr) {
            offer();
            return;
        }

        const Triple t = *pick;
        std::vector<Vertex> excluded;
        for (Vertex v : t.vertices()) {
            if (st(v) != Status::Free) continue;
            st(v) = Status::In;
            std::vector<Vertex> forced;
            for (std::size_t idx : incident_[static_cast<std::size_t>(v)]) {
                for (Vertex w : f_.edges()[idx].vertices()) {
                    if (w != v && st(w) == Status::Free) {
                        st(w) = Status::Out;
                        forced.push_back(w);
                    }
                }
            }
            recurse(chosen + 1);
            for (Vertex w : forced) st(w) = Status::Free;
            st(v) = Status::Out;
            excluded.push_back(v);
        }
        for (Vertex v : excluded) st(v) = Status::Free;
    }

    void offer() {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < f_.order(); ++v)
            if (st(v) == Status::In) members.push_back(v);
        if (!best_ || members.size() < best_->size() || (members.size() == best_->size() && members < *best_))
            best_ = std::move(members);
    }

    const TripleSystem& f_;
    std::vector<Status> status_;
    std::vector<std::vector<std::size_t>> incident_;
    std::optional<std::vector<Vertex>> best_;
};

}  // namespace

std::optional<HypergraphSigma> sigma_hypergraph(const TripleSystem& f) { return CrosscutSearch(f).run(); }

// ---------------------------------------------------------------------------
// Crosscut pairs of a graph

CrosscutPair make_crosscut_pair(const Graph& g, const VertexSet& independent) {
    CrosscutPair pair;
    pair.independent = VertexSet(static_cast<std::size_t>(g.order()));
    independent.for_each([&](Vertex v) {
        if (v >= g.order()) throw InvalidInput("crosscut pair vertex " + std::to_string(v) + " out of range");
        pair.independent.set(v);
    });
    for (const Edge& e : g.edges()) {
        const bool in_u = pair.independent.test(e.u);
        const bool in_v = pair.independent.test(e.v);
        if (in_u && in_v) throw InvalidInput("set is not independent: it contains edge " + to_string(e));
        if (!in_u && !in_v) pair.uncovered.push_back(e);
    }
    return pair;
}

namespace {

// Order on optimal pairs: weight, then larger |I|, then lexicographically smaller I.
bool better(const CrosscutPair& a, const CrosscutPair& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.independent.count() != b.independent.count()) return a.independent.count() > b.independent.count();
    return a.independent < b.independent;
}

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g)
        : g_(g), status_(static_cast<std::size_t>(g.order()), Status::Free) {
        best_ = make_crosscut_pair(g, VertexSet(static_cast<std::size_t>(g.order())));
    }

    CrosscutPair run() {
        recurse();
        return best_;
    }

private:
    Status& st(Vertex v) { return status_[static_cast<std::size_t>(v)]; }
    Status st(Vertex v) const { return status_[static_cast<std::size_t>(v)]; }

    // |I| + |E(Out, Out)| + one unit per free vertex with an excluded neighbour
    // (either it joins I or its edge to that neighbour stays uncovered) + a greedy
    // matching on the remaining free vertices.
    int lower_bound() const {
        int bound = 0;
        std::vector<char> charged(status_.size(), 0);
        for (Vertex v = 0; v < g_.order(); ++v)
            if (st(v) == Status::In) ++bound;
        for (const Edge& e : g_.edges())
            if (st(e.u) == Status::Out && st(e.v) == Status::Out) ++bound;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (st(v) != Status::Free) continue;
            for (Vertex w : g_.neighbors(v)) {
                if (st(w) == Status::Out) {
                    charged[static_cast<std::size_t>(v)] = 1;
                    ++bound;
                    break;
                }
            }
        }
        for (const Edge& e : g_.edges()) {
            if (st(e.u) != Status::Free || st(e.v) != Status::Free) continue;
            if (charged[static_cast<std::size_t>(e.u)] || charged[static_cast<std::size_t>(e.v)]) continue;
            charged[static_cast<std::size_t>(e.u)] = charged[static_cast<std::size_t>(e.v)] = 1;
            ++bound;
        }
        return bound;
    }

    void recurse() {
        if (lower_bound() > best_.weight()) return;

        Vertex pick = -1;
        int pick_degree = -1;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (st(v) != Status::Free) continue;
            int d = 0;
            for (Vertex w : g_.neighbors(v)) d += st(w) != Status::In ? 1 : 0;
            if (d > pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        if (pick < 0) {
            VertexSet chosen(static_cast<std::size_t>(g_.order()));
            for (Vertex v = 0; v < g_.order(); ++v)
                if (st(v) == Status::In) chosen.set(v);
            CrosscutPair candidate = make_crosscut_pair(g_, chosen);
            if (better(candidate, best_)) best_ = std::move(candidate);
            return;
        }

        st(pick) = Status::In;
        std::vector<Vertex> forced;
        for (Vertex w : g_.neighbors(pick)) {
            if (st(w) == Status::Free) {
                st(w) = Status::Out;
                forced.push_back(w);
            }
        }
        recurse();
        for (Vertex w : forced) st(w) = Status::Free;
        st(pick) = Status::Out;
        recurse();
        st(pick) = Status::Free;
    }

    const Graph& g_;
    std::vector<Status> status_;
    CrosscutPair best_;
};

// (weight, -|I|), minimised lexicographically.
struct Cost {
    int weight = 0;
    int neg_size = 0;

    friend Cost operator+(Cost a, Cost b) { return {a.weight + b.weight, a.neg_size + b.neg_size}; }
    friend auto operator<=>(const Cost&, const Cost&) = default;
};

constexpr Cost kInfinite{std::numeric_limits<int>::max() / 4, 0};

// Optimum over independent sets of a forest honouring per-vertex constraints.
class ForestDp {
public:
    explicit ForestDp(const Graph& g) : g_(g) {
        const auto n = static_cast<std::size_t>(g.order());
        parent_.assign(n, -1);
        std::vector<char> seen(n, 0);
        for (Vertex root = 0; root < g.order(); ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            std::vector<Vertex> stack{root};
            seen[static_cast<std::size_t>(root)] = 1;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                order_.push_back(v);
                for (Vertex w : g.neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        parent_[static_cast<std::size_t>(w)] = v;
                        stack.push_back(w);
                    }
                }
            }
        }
    }

    Cost optimum(const std::vector<Status>& constraint) const {
        const auto n = static_cast<std::size_t>(g_.order());
        std::vector<Cost> in(n), out(n);
        for (Vertex v : order_) {
            in[static_cast<std::size_t>(v)] = Cost{1, -1};
            out[static_cast<std::size_t>(v)] = Cost{0, 0};
        }
        Cost total{0, 0};
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const auto v = static_cast<std::size_t>(*it);
            if (constraint[v] == Status::Out) in[v] = kInfinite;
            if (constraint[v] == Status::In) out[v] = kInfinite;
            const Vertex p = parent_[v];
            if (p < 0) {
                total = total + std::min(in[v], out[v]);
                continue;
            }
            const auto pi = static_cast<std::size_t>(p);
            // Parent in I: child must stay out, edge covered.
            in[pi] = saturating(in[pi] + out[v]);
            // Parent out: child in I covers the edge; otherwise the edge is uncovered.
            out[pi] = saturating(out[pi] + std::min(in[v], out[v] + Cost{1, 0}));
        }
        return total;
    }

private:
    static Cost saturating(Cost c) { return c.weight >= kInfinite.weight ? kInfinite : c; }

    const Graph& g_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> order_;  // preorder, parents before children
};

}  // namespace

ExpansionSigma sigma_expansion_branch_and_bound(const Graph& g) {
    ExpansionSigma out;
    out.pair = IndependentSetSearch(g).run();
    out.sigma = out.pair.weight();
    return out;
}

ExpansionSigma sigma_expansion_forest_dp(const Graph& g) {
    if (!is_forest(g)) throw InvalidInput("forest DP needs an acyclic graph");
    const ForestDp dp(g);
    std::vector<Status> constraint(static_cast<std::size_t>(g.order()), Status::Free);
    const Cost best = dp.optimum(constraint);

    // Every optimal set has the same size, so including the smallest possible
    // vertex at each step yields the lexicographically smallest one.
    VertexSet chosen(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        bool blocked = false;
        for (Vertex w : g.neighbors(v)) blocked = blocked || chosen.test(w);
        if (!blocked) {
            constraint[static_cast<std::size_t>(v)] = Status::In;
            if (dp.optimum(constraint) == best) {
                chosen.set(v);
                continue;
            }
        }
        constraint[static_cast<std::size_t>(v)] = Status::Out;
    }

    ExpansionSigma out;
    out.pair = make_crosscut_pair(g, chosen);
    out.sigma = out.pair.weight();
    if (out.sigma != best.weight || -static_cast<int>(chosen.count()) != best.neg_size)
        throw std::logic_error("forest DP reconstruction disagrees with its optimum");
    return out;
}

ExpansionSigma sigma_expansion(const Graph& g) {
    return is_forest(g) ? sigma_expansion_forest_dp(g) : sigma_expansion_branch_and_bound(g);
}

// ---------------------------------------------------------------------------
// lambda

int lambda_tree(const Graph& tree) {
    if (!is_tree(tree)) throw InvalidInput("lambda_tree needs a tree");
    if (tree.order() == 1) return 0;
    std::vector<int> side(static_cast<std::size_t>(tree.order()), -1);
    std::vector<Vertex> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : tree.neighbors(v)) {
            if (side[static_cast<std::size_t>(w)] < 0) {
                side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                stack.push_back(w);
            }
        }
    }
    std::array<int, 2> size{0, 0};
    std::array<bool, 2> has_leaf{false, false};
    for (Vertex v = 0; v < tree.order(); ++v) {
        const int s = side[static_cast<std::size_t>(v)];
        ++size[static_cast<std::size_t>(s)];
        if (tree.degree(v) == 1) has_leaf[static_cast<std::size_t>(s)] = true;
    }
    // With equal sides both hold a leaf, so taking vertex 0's side is harmless.
    const std::size_t p = size[1] < size[0] ? 1 : 0;
    return size[p] - (has_leaf[p] ? 1 : 0);
}

int lambda_forest(const Graph& forest) {
    if (!is_forest(forest)) throw InvalidInput("lambda_forest needs an acyclic graph");
    int total = 0;
    for (const auto& comp : components(forest)) {
        if (comp.size() > 1) total += lambda_tree(induced_subgraph(forest, comp));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Forest to tree

Graph complete_forest_to_tree(const Graph& forest) {
    if (!is_forest(forest)) throw InvalidInput("complete_forest_to_tree needs an acyclic graph");
    if (forest.order() <= 1 || is_tree(forest)) return forest;
    if (forest.size() == 0)
        throw InvalidInput("an edgeless forest on two or more vertices has no tree with the same sigma");

    struct Part {
        std::vector<Vertex> vertices;
        std::vector<Vertex> independent;  // optimal max-|I| crosscut side, original labels
    };
    std::vector<Part> parts;
    std::vector<Vertex> isolated;
    for (const auto& comp : components(forest)) {
        if (comp.size() == 1) {
            isolated.push_back(comp[0]);
            continue;
        }
        const auto local = sigma_expansion(induced_subgraph(forest, comp));
        Part part{comp, {}};
        local.pair.independent.for_each([&](Vertex v) { part.independent.push_back(comp[static_cast<std::size_t>(v)]); });
        if (part.independent.empty())
            throw std::logic_error("optimal max-|I| pair of a component with edges has empty I");
        parts.push_back(std::move(part));
    }

    std::vector<Edge> edges = forest.edges();
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        const auto& here = parts[j];
        Vertex u = -1;
        for (Vertex v : here.vertices) {
            if (std::find(here.independent.begin(), here.independent.end(), v) == here.independent.end()) {
                u = v;
                break;
            }
        }
        edges.push_back(Edge::make(u, parts[j + 1].independent.front()));
    }
    // An isolated vertex hangs off a vertex of I: the new edge is covered and
    // the isolated vertex stays outside I.
    for (Vertex w : isolated) edges.push_back(Edge::make(w, parts.front().independent.front()));

    Graph tree(forest.order(), std::move(edges));
    if (!is_tree(tree)) throw std::logic_error("forest completion did not produce a tree");
    const int before = sigma_expansion(forest).sigma;
    const int after = sigma_expansion(tree).sigma;
    if (before != after) {
        throw std::logic_error("forest completion changed sigma from " + std::to_string(before) + " to " +
                               std::to_string(after));
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Lemma audit

bool CrosscutAudit::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass; });
}

CrosscutAudit check_crosscut_lemmas(const Graph& tree) {
    if (!is_tree(tree)) throw InvalidInput("check_crosscut_lemmas needs a tree");
    const auto best = sigma_expansion(tree);
    if (best.sigma == 0) throw InvalidInput("check_crosscut_lemmas needs sigma > 0 (a tree with an edge)");

    CrosscutAudit audit;
    audit.sigma = best.sigma;
    audit.pair = best.pair;
    const int ell = best.sigma - 1;
    const Graph r_forest(tree.order(), best.pair.uncovered);
    audit.lambda = lambda_forest(r_forest);
    const int r_size = static_cast<int>(best.pair.uncovered.size());
    const int i_size = static_cast<int>(best.pair.independent.count());

    {
        LemmaCheck c{"uncovered-at-most-half-ell", 2 * r_size <= ell, ""};
        if (!c.pass) c.detail = "|R| = " + std::to_string(r_size) + " > l/2 with l = " + std::to_string(ell);
        audit.checks.push_back(std::move(c));
    }
    {
        LemmaCheck c{"no-pendant-edge-uncovered", true, ""};
        for (const Edge& e : best.pair.uncovered) {
            if (tree.degree(e.u) == 1 || tree.degree(e.v) == 1) {
                c.pass = false;
                c.detail += (c.detail.empty() ? "pendant edges in R: " : ", ") + to_string(e);
            }
        }
        audit.checks.push_back(std::move(c));
    }
    {
        LemmaCheck c{"independent-exceeds-uncovered", i_size >= 1 + r_size, ""};
        if (!c.pass) c.detail = "|I| = " + std::to_string(i_size) + ", |R| = " + std::to_string(r_size);
        audit.checks.push_back(std::move(c));
    }
    {
        LemmaCheck c{"uncovered-vertex-degree", true, ""};
        const int cap = ell - audit.lambda;
        VertexSet touched(static_cast<std::size_t>(tree.order()));
        for (const Edge& e : best.pair.uncovered) {
            touched.set(e.u);
            touched.set(e.v);
        }
        touched.for_each([&](Vertex r) {
            if (tree.degree(r) > cap) {
                c.pass = false;
                c.detail += (c.detail.empty() ? "" : ", ") + std::string("d(") + std::to_string(r) +
                            ") = " + std::to_string(tree.degree(r)) + " > l - lambda = " + std::to_string(cap);
            }
        });
        audit.checks.push_back(std::move(c));
    }
    return audit;
}

}  // namespace tripex
