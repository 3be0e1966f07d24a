#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tripex {

using Vertex = int;

/// Set of dense vertex labels 0..capacity-1.
///
/// One 64-bit word is stored inline, so sets over at most 64 vertices never
/// touch the heap; larger universes spill into extra words.
class VertexSet {
public:
    using Word = std::uint64_t;

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : capacity_(capacity), words_(word_count(capacity), Word{0}) {}
    VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
        : VertexSet(capacity) {
        for (Vertex v : members) set(v);
    }

    static VertexSet from_members(std::size_t capacity, const std::vector<Vertex>& members) {
        VertexSet s(capacity);
        for (Vertex v : members) s.set(v);
        return s;
    }

    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

    void set(Vertex v) { words_[word_of(v)] |= bit_of(v); }
    void reset(Vertex v) { words_[word_of(v)] &= ~bit_of(v); }
    [[nodiscard]] bool test(Vertex v) const {
        return static_cast<std::size_t>(v) < capacity_ && (words_[word_of(v)] & bit_of(v)) != 0;
    }
    [[nodiscard]] bool contains(Vertex v) const { return test(v); }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool empty() const noexcept {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] Vertex first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    [[nodiscard]] bool intersects(const VertexSet& o) const noexcept {
        const std::size_t k = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const Word other = i < o.words_.size() ? o.words_[i] : Word{0};
            if ((words_[i] & ~other) != 0) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        grow_to(o.capacity_);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : Word{0};
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        const std::size_t k = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < k; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                fn(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Equality ignores capacity: two sets are equal iff they have the same members.
    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        const std::size_t k = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < k; ++i) {
            const Word x = i < a.words_.size() ? a.words_[i] : Word{0};
            const Word y = i < b.words_.size() ? b.words_[i] : Word{0};
            if (x != y) return false;
        }
        return true;
    }

    /// Lexicographic order of the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        const auto x = a.members();
        const auto y = b.members();
        return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
    }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Word w : words_) {
            if (w == 0) continue;
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static std::size_t word_count(std::size_t capacity) { return (capacity + 63) / 64; }
    static std::size_t word_of(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
    static Word bit_of(Vertex v) { return Word{1} << (static_cast<unsigned>(v) & 63U); }

    void grow_to(std::size_t capacity) {
        if (capacity <= capacity_) return;
        capacity_ = capacity;
        words_.resize(word_count(capacity), Word{0});
    }

    std::size_t capacity_ = 0;
    boost::container::small_vector<Word, 1> words_;
};

}  // namespace tripex

template <>
struct std::hash<tripex::VertexSet> {
    std::size_t operator()(const tripex::VertexSet& s) const noexcept { return s.hash(); }
};
