#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tripex/core.hpp"

namespace tripex {

// ---------------------------------------------------------------------------
// Full subgraphs

/// True iff every sub-edge of h has codegree at least d in h.
[[nodiscard]] bool is_full(const TripleSystem& h, int d);

/// A (d+1)-full subgraph of h with at least |h| - d|shadow(h)| triples.
///
/// Repeatedly takes the lexicographically smallest sub-edge whose current
/// codegree is at most d and deletes every triple through it. The result may
/// be empty. Throws InvalidInput for d < 1.
[[nodiscard]] TripleSystem full_subgraph(const TripleSystem& h, int d);

// ---------------------------------------------------------------------------
// Sunflowers

/// Family of vertex sets, each of size at most k. Sets are stored sorted.
class SetFamily {
public:
    SetFamily() = default;
    SetFamily(std::vector<std::vector<Vertex>> sets, int k, bool allow_duplicates = false);

    [[nodiscard]] const std::vector<std::vector<Vertex>>& sets() const noexcept { return sets_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }

private:
    std::vector<std::vector<Vertex>> sets_;
    int k_ = 0;
};

/// Indices into a SetFamily whose pairwise intersections all equal `core`.
struct Sunflower {
    std::vector<std::size_t> petals;
    std::vector<Vertex> core;
};

/// k!(s-1)^k, saturated at INT64_MAX.
[[nodiscard]] std::int64_t sunflower_threshold(int k, int s);

/// Erdos-Rado recursion: take a maximal pairwise-disjoint subfamily; if it has
/// s members return them, otherwise recurse on the link of the most frequent
/// element and add that element to the core. Throws InvalidInput for s < 1.
[[nodiscard]] std::optional<Sunflower> find_sunflower(const SetFamily& family, int s);

/// Checks the sunflower condition directly from the member sets.
[[nodiscard]] bool is_sunflower(const SetFamily& family, const Sunflower& flower);

// ---------------------------------------------------------------------------
// Disjoint augmented sets

/// Pairs (A_i, a_i) with the A_i pairwise disjoint and the a_i distinct.
/// a_i may lie in A_i.
class AugmentedFamily {
public:
    using Member = std::pair<std::vector<Vertex>, Vertex>;

    AugmentedFamily() = default;
    explicit AugmentedFamily(std::vector<Member> members);

    [[nodiscard]] const std::vector<Member>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }

private:
    std::vector<Member> members_;
};

/// At least ceil(m/3) indices whose sets A_i + a_i are pairwise disjoint: the
/// conflict digraph i -> j (a_i in A_j) has out-degree at most one, so it is
/// 3-colourable; the largest colour class is returned, sorted.
[[nodiscard]] std::vector<std::size_t> select_disjoint_augmented(const AugmentedFamily& family);

// ---------------------------------------------------------------------------
// Complete bipartite subgraphs avoiding per-edge lists

using EdgeLists = std::map<Edge, std::vector<Vertex>>;

struct Biclique {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// Exact backtracking for K_{t,t} inside `f` whose vertex set misses lists[e]
/// for each of its edges e. `f` must lie in shadow(h) and every edge of `f`
/// needs a list. Returns the first grid in lexicographic order of (left, right)
/// with min(left) < min(right).
[[nodiscard]] std::optional<Biclique> find_biclique_avoiding_lists(const Graph& f, const EdgeLists& lists, int t,
                                                                   const TripleSystem& h);

/// Random vertex sample T (each vertex kept with probability 1/2); keeps the
/// edges of f inside T whose list misses T. Optional preprocessing for the
/// exact search.
[[nodiscard]] Graph random_list_filter(const Graph& f, const EdgeLists& lists, std::mt19937_64& rng);

}  // namespace tripex
