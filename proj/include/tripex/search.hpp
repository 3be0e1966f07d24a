#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripex/core.hpp"

namespace tripex {

enum class EmbeddingKind { Subhypergraph, Expansion };

[[nodiscard]] std::string to_string(EmbeddingKind k);

/// Injective map from the vertices of F that lie in some triple into V(H),
/// sorted by source vertex. For expansions the enlargement vertices use the
/// numbering of expand().
struct EmbeddingCertificate {
    std::vector<std::pair<Vertex, Vertex>> map;
    EmbeddingKind kind = EmbeddingKind::Subhypergraph;
};

/// Injective and every triple of f lands on a triple of h.
[[nodiscard]] bool verify_embedding(const TripleSystem& h, const TripleSystem& f, const EmbeddingCertificate& cert);

/// Non-induced copy of f in h. Vertices of f in no triple are ignored.
[[nodiscard]] std::optional<EmbeddingCertificate> contains(const TripleSystem& h, const TripleSystem& f);

/// Copy of g⁺ in h: map g into shadow(h), then match the edges of g to
/// distinct third vertices outside the image.
[[nodiscard]] std::optional<EmbeddingCertificate> contains_expansion(const TripleSystem& h, const Graph& g);

/// All triples with exactly one vertex in {0..c-1}: c·C(n-c, 2) edges.
[[nodiscard]] TripleSystem lower_bound_construction(int n, int c);

/// All triples through vertex 0.
[[nodiscard]] TripleSystem star_construction(int n);

/// Unset fields mean unlimited.
struct Budget {
    std::optional<std::chrono::milliseconds> time;
    std::optional<std::uint64_t> nodes;
};

struct TuranResult {
    int n = 0;
    TripleSystem forbidden;
    int value = 0;
    TripleSystem witness;
    bool exact = false;  // false: value is only a lower bound
    std::uint64_t nodes = 0;
};

/// ex_3(n, f) by include-first branch and bound over triples in lexicographic
/// order. Subtrees rooted at the first included triple are shared among
/// `workers` threads; the answer (largest value, then lexicographically
/// smallest witness) does not depend on the worker count unless the budget
/// runs out. Throws InvalidInput for n < 3, workers < 1 or f without triples.
[[nodiscard]] TuranResult turan_number(int n, const TripleSystem& f, const Budget& budget = {}, int workers = 1);

struct Theorem1Row {
    int n = 0;
    long long bound = 0;            // c·C(n-c, 2), c = sigma - 1
    bool construction_free = false;
    std::optional<TuranResult> exact;
    std::optional<double> ratio;    // ex / ((sigma-1)·C(n,2)), descriptive only
};

struct Theorem1Audit {
    Graph forest;
    int sigma = 0;
    std::vector<Theorem1Row> rows;
    [[nodiscard]] bool all_pass() const;
};

/// For each n: the lower-bound construction, its freeness, and the exact
/// Turán number when n <= max_exact_n. Throws InvalidInput for non-forests.
[[nodiscard]] Theorem1Audit audit_theorem1(const Graph& forest, const std::vector<int>& ns,
                                           const Budget& budget = {}, int max_exact_n = 6, int workers = 1);

struct JumpAudit {
    Graph graph;
    int n = 0;
    int sigma = 0;
    std::string construction;   // "core-2", "star" or "none"
    long long expected_edges = 0;
    std::optional<TripleSystem> family;
    bool free = false;
    // sigma = 2 only: the two shapes such graphs fit into.
    bool star_plus_edge = false;
    bool two_vertex_cover = false;
    [[nodiscard]] bool pass() const;
};

[[nodiscard]] JumpAudit audit_jump(const Graph& g, int n);

}  // namespace tripex
