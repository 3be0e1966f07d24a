#include "tripex/ramsey.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tripex {

namespace {

void check_sides(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
    if (xs.empty() || ys.empty()) throw InvalidInput("grid sides must be non-empty");
    std::set<Vertex> seen;
    for (Vertex v : xs)
        if (!seen.insert(v).second) throw InvalidInput("grid vertex " + std::to_string(v) + " repeated");
    for (Vertex v : ys)
        if (!seen.insert(v).second) throw InvalidInput("grid vertex " + std::to_string(v) + " repeated");
}

template <class T>
std::vector<T> pick(const std::vector<T>& from, const std::vector<std::size_t>& at) {
    std::vector<T> out;
    out.reserve(at.size());
    for (std::size_t i : at) out.push_back(from.at(i));
    return out;
}

// Calls fn on each k-subset of {0..n-1} in lexicographic order until fn returns true.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

GridColoring::GridColoring(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<int> colors)
    : xs_(std::move(xs)), ys_(std::move(ys)), colors_(std::move(colors)) {
    check_sides(xs_, ys_);
    if (colors_.size() != rows() * cols())
        throw InvalidInput("grid colouring needs " + std::to_string(rows() * cols()) + " colours, got " +
                           std::to_string(colors_.size()));
    for (int c : colors_)
        if (c < 0) throw InvalidInput("colours must be non-negative");
}

GridColoring GridColoring::restrict_to(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
    std::vector<int> sub;
    sub.reserve(rows.size() * cols.size());
    for (std::size_t r : rows)
        for (std::size_t c : cols) sub.push_back(color(r, c));
    return GridColoring(pick(xs_, rows), pick(ys_, cols), std::move(sub));
}

std::vector<std::string> Classification::labels() const {
    std::vector<std::string> out;
    if (monochromatic) out.emplace_back("monochromatic");
    if (rainbow) out.emplace_back("rainbow");
    if (x_canonical) out.emplace_back("X-canonical");
    if (y_canonical) out.emplace_back("Y-canonical");
    if (out.empty()) out.emplace_back("none");
    return out;
}

Classification classify(const GridColoring& c) {
    Classification out;
    const auto& all = c.colors();
    out.monochromatic = std::all_of(all.begin(), all.end(), [&](int x) { return x == all.front(); });
    out.rainbow = std::unordered_set<int>(all.begin(), all.end()).size() == all.size();

    auto canonical = [&](bool by_row) {
        const std::size_t outer = by_row ? c.rows() : c.cols();
        const std::size_t inner = by_row ? c.cols() : c.rows();
        std::unordered_set<int> seen;
        for (std::size_t i = 0; i < outer; ++i) {
            const int first = by_row ? c.color(i, 0) : c.color(0, i);
            for (std::size_t j = 1; j < inner; ++j)
                if ((by_row ? c.color(i, j) : c.color(j, i)) != first) return false;
            if (!seen.insert(first).second) return false;
        }
        return true;
    };
    out.x_canonical = canonical(true);
    out.y_canonical = canonical(false);
    return out;
}

std::optional<ClassifiedSubgrid> find_classified_subgrid(const GridColoring& c, int s) {
    if (s < 1 || static_cast<std::size_t>(s) > std::min(c.rows(), c.cols()))
        throw InvalidInput("subgrid size must lie in [1, " + std::to_string(std::min(c.rows(), c.cols())) + "]");
    const auto k = static_cast<std::size_t>(s);
    std::optional<ClassifiedSubgrid> found;
    for_each_subset(c.rows(), k, [&](const std::vector<std::size_t>& rows) {
        return for_each_subset(c.cols(), k, [&](const std::vector<std::size_t>& cols) {
            const auto labels = classify(c.restrict_to(rows, cols));
            if (!labels.any()) return false;
            found = ClassifiedSubgrid{rows, cols, labels};
            return true;
        });
    });
    return found;
}

ListAssignment::ListAssignment(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<std::vector<Vertex>> lists)
    : xs_(std::move(xs)), ys_(std::move(ys)), lists_(std::move(lists)) {
    check_sides(xs_, ys_);
    if (lists_.size() != rows() * cols()) throw InvalidInput("list assignment needs one list per grid edge");
    std::unordered_set<Vertex> grid(xs_.begin(), xs_.end());
    grid.insert(ys_.begin(), ys_.end());
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end()) throw InvalidInput("list has a repeated colour");
        for (Vertex z : l)
            if (z < 0 || grid.contains(z)) throw InvalidInput("list colour " + std::to_string(z) + " is invalid");
    }
}

ListAssignment ListAssignment::restrict_to(const std::vector<std::size_t>& rows,
                                           const std::vector<std::size_t>& cols) const {
    std::vector<std::vector<Vertex>> sub;
    sub.reserve(rows.size() * cols.size());
    for (std::size_t r : rows)
        for (std::size_t c : cols) sub.push_back(list(r, c));
    return ListAssignment(pick(xs_, rows), pick(ys_, cols), std::move(sub));
}

ListAssignment build_list_assignment(const TripleSystem& h, const std::vector<Vertex>& xs,
                                     const std::vector<Vertex>& ys) {
    check_sides(xs, ys);
    for (const auto* side : {&xs, &ys})
        for (Vertex v : *side)
            if (v < 0 || v >= h.order()) throw InvalidInput("grid vertex " + std::to_string(v) + " out of range");
    std::unordered_set<Vertex> grid(xs.begin(), xs.end());
    grid.insert(ys.begin(), ys.end());
    std::vector<std::vector<Vertex>> lists;
    lists.reserve(xs.size() * ys.size());
    for (Vertex x : xs) {
        for (Vertex y : ys) {
            const auto& third = h.third_vertices(x, y);
            if (third.empty())
                throw InvalidInput("grid pair " + to_string(Edge::make(x, y)) + " is not in the shadow");
            std::vector<Vertex> l;
            std::copy_if(third.begin(), third.end(), std::back_inserter(l), [&](Vertex z) { return !grid.contains(z); });
            lists.push_back(std::move(l));
        }
    }
    return ListAssignment(xs, ys, std::move(lists));
}

bool is_multicoloring(const ListAssignment& la, const Multicoloring& mc) {
    const std::size_t edges = la.rows() * la.cols();
    for (const auto& col : mc.colorings) {
        if (col.size() != edges) return false;
        for (std::size_t e = 0; e < edges; ++e)
            if (!std::binary_search(la.lists()[e].begin(), la.lists()[e].end(), col[e])) return false;
    }
    for (std::size_t e = 0; e < edges; ++e) {
        std::unordered_set<Vertex> seen;
        for (const auto& col : mc.colorings)
            if (!seen.insert(col[e]).second) return false;
    }
    return true;
}

bool pairwise_disjoint(const Multicoloring& mc) {
    std::vector<std::unordered_set<Vertex>> used;
    for (const auto& col : mc.colorings) used.emplace_back(col.begin(), col.end());
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = i + 1; j < used.size(); ++j)
            for (Vertex c : used[i])
                if (used[j].contains(c)) return false;
    return true;
}

std::optional<Multicoloring> extract_multicoloring(const ListAssignment& la, int m) {
    if (m < 1) throw InvalidInput("multicolouring needs m >= 1");
    const auto mm = static_cast<std::size_t>(m);
    for (const auto& l : la.lists())
        if (l.size() < mm) return std::nullopt;
    Multicoloring out;
    out.colorings.assign(mm, {});
    for (std::size_t i = 0; i < mm; ++i)
        for (const auto& l : la.lists()) out.colorings[i].push_back(l[i]);
    return out;
}

GridColoring coloring_grid(const ListAssignment& la, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols, const std::vector<Vertex>& coloring) {
    std::vector<int> colors;
    colors.reserve(rows.size() * cols.size());
    for (std::size_t r : rows)
        for (std::size_t c : cols) colors.push_back(coloring.at(r * la.cols() + c));
    return GridColoring(pick(la.xs(), rows), pick(la.ys(), cols), std::move(colors));
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ProvenAbsent: return "absent";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

struct BudgetOut {};

// Search on one s×s list assignment.
class SubgridSearch {
public:
    SubgridSearch(const ListAssignment& la, std::size_t m, std::uint64_t& nodes, std::uint64_t budget)
        : la_(la), m_(m), nodes_(nodes), budget_(budget), s_(la.rows()) {}

    std::optional<Multicoloring> rainbow() {
        const std::size_t edges = s_ * s_;
        owner_.clear();
        std::vector<Vertex> assigned(edges, -1);
        for (std::size_t e = 0; e < edges; ++e) {
            std::set<Vertex> seen;
            if (!augment(e, assigned, seen)) return std::nullopt;
        }
        return Multicoloring{{assigned}};
    }

    std::optional<Multicoloring> structured() {
        chosen_.clear();
        used_.clear();
        if (!next_coloring()) return std::nullopt;
        return Multicoloring{chosen_};
    }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetOut{};
    }

    bool augment(std::size_t e, std::vector<Vertex>& assigned, std::set<Vertex>& seen) {
        tick();
        for (Vertex c : la_.lists()[e]) {
            if (!seen.insert(c).second) continue;
            auto it = owner_.find(c);
            if (it == owner_.end() || augment(it->second, assigned, seen)) {
                owner_[c] = e;
                assigned[e] = c;
                return true;
            }
        }
        return false;
    }

    // Colours available on every edge of the given row (by_row) or column.
    std::vector<Vertex> common(bool by_row, std::size_t i) const {
        std::vector<Vertex> acc = by_row ? la_.list(i, 0) : la_.list(0, i);
        for (std::size_t j = 1; j < s_ && !acc.empty(); ++j) {
            const auto& l = by_row ? la_.list(i, j) : la_.list(j, i);
            std::vector<Vertex> next;
            std::set_intersection(acc.begin(), acc.end(), l.begin(), l.end(), std::back_inserter(next));
            acc = std::move(next);
        }
        std::erase_if(acc, [&](Vertex c) { return used_.contains(c); });
        return acc;
    }

    bool next_coloring() {
        tick();
        if (chosen_.size() == m_) return true;
        // Monochromatic.
        std::vector<Vertex> all = common(true, 0);
        for (std::size_t r = 1; r < s_; ++r) {
            const auto row = common(true, r);
            std::vector<Vertex> next;
            std::set_intersection(all.begin(), all.end(), row.begin(), row.end(), std::back_inserter(next));
            all = std::move(next);
        }
        for (Vertex c : all) {
            if (push(std::vector<Vertex>(s_ * s_, c)) && next_coloring()) return true;
            pop();
        }
        if (s_ == 1) return false;  // canonical colourings of a single edge are monochromatic
        for (bool by_row : {true, false}) {
            std::vector<std::vector<Vertex>> options;
            for (std::size_t i = 0; i < s_; ++i) options.push_back(common(by_row, i));
            std::vector<Vertex> picked;
            if (canonical(by_row, options, picked)) return true;
        }
        return false;
    }

    // Assign distinct colours to rows (or columns) one at a time.
    bool canonical(bool by_row, const std::vector<std::vector<Vertex>>& options, std::vector<Vertex>& picked) {
        tick();
        if (picked.size() == s_) {
            std::vector<Vertex> col(s_ * s_);
            for (std::size_t r = 0; r < s_; ++r)
                for (std::size_t c = 0; c < s_; ++c) col[r * s_ + c] = picked[by_row ? r : c];
            if (push(std::move(col)) && next_coloring()) return true;
            pop();
            return false;
        }
        for (Vertex c : options[picked.size()]) {
            if (std::find(picked.begin(), picked.end(), c) != picked.end()) continue;
            picked.push_back(c);
            if (canonical(by_row, options, picked)) return true;
            picked.pop_back();
        }
        return false;
    }

    bool push(std::vector<Vertex> col) {
        for (Vertex c : col) used_.insert(c);
        chosen_.push_back(std::move(col));
        return true;
    }

    void pop() {
        for (Vertex c : chosen_.back()) used_.erase(c);
        chosen_.pop_back();
    }

    const ListAssignment& la_;
    std::size_t m_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::size_t s_;
    std::map<Vertex, std::size_t> owner_;
    std::vector<std::vector<Vertex>> chosen_;
    std::set<Vertex> used_;
};

}  // namespace

StructuredSearch find_structured_multicoloring(const ListAssignment& la, int m, int s, std::uint64_t node_budget) {
    if (m < 1) throw InvalidInput("multicolouring needs m >= 1");
    if (s < 1 || static_cast<std::size_t>(s) > std::min(la.rows(), la.cols()))
        throw InvalidInput("subgrid size must lie in [1, " + std::to_string(std::min(la.rows(), la.cols())) + "]");

    StructuredSearch out;
    const auto k = static_cast<std::size_t>(s);
    try {
        for_each_subset(la.rows(), k, [&](const std::vector<std::size_t>& rows) {
            return for_each_subset(la.cols(), k, [&](const std::vector<std::size_t>& cols) {
                const auto sub = la.restrict_to(rows, cols);
                SubgridSearch search(sub, static_cast<std::size_t>(m), out.nodes, node_budget);
                bool rainbow = true;
                auto mc = search.rainbow();
                if (!mc) {
                    rainbow = false;
                    mc = search.structured();
                }
                if (!mc) return false;

                StructuredMulticoloring cert{rows, cols, rainbow, std::move(*mc), {}};
                const std::vector<std::size_t> all = [&] {
                    std::vector<std::size_t> v(k);
                    for (std::size_t i = 0; i < k; ++i) v[i] = i;
                    return v;
                }();
                for (const auto& col : cert.colorings.colorings) {
                    const auto labels = classify(coloring_grid(sub, all, all, col));
                    const bool ok = rainbow ? labels.rainbow
                                            : (labels.monochromatic || labels.x_canonical || labels.y_canonical);
                    if (!ok) throw std::logic_error("structured multicolouring failed classification");
                    cert.labels.push_back(labels);
                }
                if (!is_multicoloring(sub, cert.colorings) || !pairwise_disjoint(cert.colorings))
                    throw std::logic_error("structured multicolouring failed verification");
                out.status = SearchStatus::Found;
                out.result = std::move(cert);
                return true;
            });
        });
    } catch (const BudgetOut&) {
        out.status = SearchStatus::BudgetExhausted;
        out.result.reset();
    }
    return out;
}

}  // namespace tripex
