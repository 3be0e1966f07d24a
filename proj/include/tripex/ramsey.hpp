#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripex/core.hpp"

namespace tripex {

/// Edge colouring of the complete bipartite grid xs × ys. Colours are opaque
/// non-negative integers stored row-major (row = position in xs).
class GridColoring {
public:
    GridColoring() = default;
    GridColoring(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<int> colors);

    [[nodiscard]] const std::vector<Vertex>& xs() const noexcept { return xs_; }
    [[nodiscard]] const std::vector<Vertex>& ys() const noexcept { return ys_; }
    [[nodiscard]] std::size_t rows() const noexcept { return xs_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return ys_.size(); }
    [[nodiscard]] int color(std::size_t row, std::size_t col) const { return colors_[row * cols() + col]; }
    [[nodiscard]] const std::vector<int>& colors() const noexcept { return colors_; }

    /// Sub-grid on the given row and column positions.
    [[nodiscard]] GridColoring restrict_to(const std::vector<std::size_t>& rows,
                                           const std::vector<std::size_t>& cols) const;

private:
    std::vector<Vertex> xs_;
    std::vector<Vertex> ys_;
    std::vector<int> colors_;
};

/// All labels that hold. Degenerate grids (a side of size one) satisfy several.
struct Classification {
    bool monochromatic = false;
    bool rainbow = false;
    bool x_canonical = false;
    bool y_canonical = false;

    [[nodiscard]] bool any() const noexcept { return monochromatic || rainbow || x_canonical || y_canonical; }
    /// Label names; {"none"} when nothing holds.
    [[nodiscard]] std::vector<std::string> labels() const;
    friend bool operator==(const Classification&, const Classification&) = default;
};

[[nodiscard]] Classification classify(const GridColoring& c);

struct ClassifiedSubgrid {
    std::vector<std::size_t> rows;  // positions in xs
    std::vector<std::size_t> cols;  // positions in ys
    Classification labels;
};

/// First s×s subgrid (rows, then columns, both in lexicographic subset order)
/// that is monochromatic, rainbow or canonical. Throws InvalidInput unless
/// 1 <= s <= min(rows, cols).
[[nodiscard]] std::optional<ClassifiedSubgrid> find_classified_subgrid(const GridColoring& c, int s);

/// Lists L(e) = N_H(e) \ V(grid) for the grid xs × ys inside shadow(H).
class ListAssignment {
public:
    ListAssignment() = default;
    ListAssignment(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<std::vector<Vertex>> lists);

    [[nodiscard]] const std::vector<Vertex>& xs() const noexcept { return xs_; }
    [[nodiscard]] const std::vector<Vertex>& ys() const noexcept { return ys_; }
    [[nodiscard]] std::size_t rows() const noexcept { return xs_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return ys_.size(); }
    [[nodiscard]] const std::vector<Vertex>& list(std::size_t row, std::size_t col) const {
        return lists_[row * cols() + col];
    }
    [[nodiscard]] const std::vector<std::vector<Vertex>>& lists() const noexcept { return lists_; }

    [[nodiscard]] ListAssignment restrict_to(const std::vector<std::size_t>& rows,
                                             const std::vector<std::size_t>& cols) const;

private:
    std::vector<Vertex> xs_;
    std::vector<Vertex> ys_;
    std::vector<std::vector<Vertex>> lists_;
};

/// Throws InvalidInput when xs and ys meet or a grid pair is not a sub-edge of h.
[[nodiscard]] ListAssignment build_list_assignment(const TripleSystem& h, const std::vector<Vertex>& xs,
                                                   const std::vector<Vertex>& ys);

/// m list colourings of a grid; colorings[i] is row-major like the lists.
struct Multicoloring {
    std::vector<std::vector<Vertex>> colorings;
};

/// Every colouring picks from the lists and no edge sees a colour twice.
[[nodiscard]] bool is_multicoloring(const ListAssignment& la, const Multicoloring& mc);

/// Colourings of distinct indices share no colour at all.
[[nodiscard]] bool pairwise_disjoint(const Multicoloring& mc);

/// Colouring i uses the i-th smallest list entry of every edge. Present iff
/// every list has at least m entries.
[[nodiscard]] std::optional<Multicoloring> extract_multicoloring(const ListAssignment& la, int m);

/// Grid colouring of one colouring of a multicolouring, restricted to a subgrid.
[[nodiscard]] GridColoring coloring_grid(const ListAssignment& la, const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols, const std::vector<Vertex>& coloring);

enum class SearchStatus { Found, ProvenAbsent, BudgetExhausted };

[[nodiscard]] std::string to_string(SearchStatus s);

struct StructuredMulticoloring {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    bool rainbow = false;       // one injective list colouring
    Multicoloring colorings;    // over the s×s subgrid, row-major
    std::vector<Classification> labels;
};

struct StructuredSearch {
    SearchStatus status = SearchStatus::ProvenAbsent;
    std::optional<StructuredMulticoloring> result;
    std::uint64_t nodes = 0;
};

/// Searches s×s subgrids for either a rainbow list colouring or m pairwise
/// disjoint list colourings, each monochromatic or canonical. Every certificate
/// is checked with classify() before it is returned. `node_budget` caps the
/// backtracking nodes; running out is reported as BudgetExhausted.
[[nodiscard]] StructuredSearch find_structured_multicoloring(const ListAssignment& la, int m, int s,
                                                             std::uint64_t node_budget = 10'000'000);

}  // namespace tripex
