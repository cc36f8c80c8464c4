#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pzf {

/// Fixed-width bit vector over the vertices 0..n-1 of one graph.
/// The width is fixed at construction; all sets compared or combined
/// must share it.
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative width");
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }

    int width() const { return n_; }

    bool test(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool all() const { return count() == static_cast<std::size_t>(n_); }

    /// True iff other ⊆ this.
    bool contains(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Total order by bit pattern; gives maps and sorts a deterministic order.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i])
                return a.words_[i] < b.words_[i] ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// Visit set bits in ascending vertex order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    /// Big-endian hex of the bit pattern, no leading zeros beyond one digit.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (std::size_t i = words_.size(); i-- > 0;) {
            for (int shift = 60; shift >= 0; shift -= 4) {
                int d = static_cast<int>((words_[i] >> shift) & 0xf);
                if (!out.empty() || d != 0) out.push_back(digits[d]);
            }
        }
        if (out.empty()) out = "0";
        return out;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(n_);
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

  private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending vertex index sequences,
/// e.g. {0,5} before {1,2}. Distinct from operator< (bit-pattern order).
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    return a.to_indices() < b.to_indices();
}

}  // namespace pzf

template <>
struct std::hash<pzf::VertexSet> {
    std::size_t operator()(const pzf::VertexSet& s) const { return s.hash(); }
};
