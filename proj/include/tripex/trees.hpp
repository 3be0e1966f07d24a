#pragma once

#include <string>
#include <vector>

#include "tripex/core.hpp"

namespace tripex {

/// Connected components, each sorted, ordered by smallest vertex.
[[nodiscard]] std::vector<std::vector<Vertex>> components(const Graph& g);

[[nodiscard]] bool is_forest(const Graph& g);
/// Connected and acyclic with at least one vertex.
[[nodiscard]] bool is_tree(const Graph& g);

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
[[nodiscard]] Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// Isomorphism-invariant string for a forest (rooted-at-centre encoding per
/// component, components sorted).
[[nodiscard]] std::string forest_canonical_form(const Graph& forest);

/// One representative of every isomorphism class of trees on k vertices.
[[nodiscard]] std::vector<Graph> nonisomorphic_trees(int k);

/// One representative of every isomorphism class of forests on k vertices
/// (isolated vertices included).
[[nodiscard]] std::vector<Graph> nonisomorphic_forests(int k);

[[nodiscard]] Graph path_graph(int k);
[[nodiscard]] Graph star_graph(int leaves);

}  // namespace tripex
