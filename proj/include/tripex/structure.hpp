#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripex/core.hpp"

namespace tripex {

/// The 3-uniform expansion of a graph: every base edge e gains its own new
/// vertex v_e. Enlargement vertices are numbered n, n+1, ... following the
/// sorted edge order of the base graph.
struct Expansion {
    Graph base;
    TripleSystem triples;
    std::vector<Vertex> enlargement;  // indexed like base.edges()

    [[nodiscard]] Vertex enlargement_of(const Edge& e) const;
};

[[nodiscard]] Expansion expand(const Graph& g);

/// Vertex set meeting every triple in exactly one vertex.
struct CrosscutWitness {
    VertexSet vertices;
};

struct HypergraphSigma {
    int sigma = 0;
    CrosscutWitness witness;
};

/// Minimum crosscut of f by exact search; among minimum crosscuts the
/// lexicographically smallest is returned. Empty when f has no crosscut.
[[nodiscard]] std::optional<HypergraphSigma> sigma_hypergraph(const TripleSystem& f);

/// An independent set I of a graph together with R, the edges missed by I.
struct CrosscutPair {
    VertexSet independent;
    std::vector<Edge> uncovered;

    [[nodiscard]] int weight() const {
        return static_cast<int>(independent.count() + uncovered.size());
    }
};

/// Builds (I, R) from I, rejecting sets that are not independent in g.
[[nodiscard]] CrosscutPair make_crosscut_pair(const Graph& g, const VertexSet& independent);

struct ExpansionSigma {
    int sigma = 0;
    CrosscutPair pair;
};

// sigma(G+) = min |I| + |G - I| over independent sets I. All three entry points
// return the same optimal pair: minimum weight, then maximum |I|, then the
// lexicographically smallest I.

/// Dispatches to the forest DP when g is acyclic, branch and bound otherwise.
[[nodiscard]] ExpansionSigma sigma_expansion(const Graph& g);
/// Branch and bound over independent sets, branching on a vertex of maximum degree.
[[nodiscard]] ExpansionSigma sigma_expansion_branch_and_bound(const Graph& g);
/// Linear-time DP over each rooted component; g must be a forest.
[[nodiscard]] ExpansionSigma sigma_expansion_forest_dp(const Graph& g);

/// lambda(T): size of the smaller side P of the bipartition, minus one when P
/// holds a leaf. One-vertex trees get 0.
[[nodiscard]] int lambda_tree(const Graph& tree);
/// Sum of lambda over the components; isolated vertices contribute 0.
[[nodiscard]] int lambda_forest(const Graph& forest);

/// A tree on the same vertices that contains `forest` and has the same sigma.
/// Throws InvalidInput for cyclic input and for edgeless forests on two or
/// more vertices (every such tree has an edge, so sigma cannot be kept at 0).
[[nodiscard]] Graph complete_forest_to_tree(const Graph& forest);

struct LemmaCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CrosscutAudit {
    int sigma = 0;
    CrosscutPair pair;
    int lambda = 0;  // lambda of the forest formed by the uncovered edges
    std::vector<LemmaCheck> checks;

    [[nodiscard]] bool all_pass() const;
};

/// Structural facts about the max-|I| optimal crosscut pair of a tree with
/// sigma = l + 1 > 0: |R| <= l/2, no pendant edge in R, |I| >= 1 + |R|, and
/// d_T(r) <= l - lambda(R) for every r in V(R).
[[nodiscard]] CrosscutAudit check_crosscut_lemmas(const Graph& tree);

}  // namespace tripex
