#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vcgraph/errors.hpp"

namespace vcgraph {

using VertexId = std::uint32_t;

/// Fixed-size bit vector over vertex ids 0..size()-1. Used for adjacency rows
/// and for arbitrary vertex subsets.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    VertexSet(std::size_t size, std::initializer_list<VertexId> members) : VertexSet(size) {
        for (VertexId v : members) insert(v);
    }

    static VertexSet full(std::size_t size) {
        VertexSet s(size);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet from_range(std::size_t size, const Range& ids) {
        VertexSet s(size);
        for (auto v : ids) s.insert(static_cast<VertexId>(v));
        return s;
    }

    std::size_t size() const noexcept { return size_; }

    bool contains(VertexId v) const noexcept {
        return v < size_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }

    void insert(VertexId v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(VertexId v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
            if ((words_[i] & ~o) != 0) return false;
        }
        return true;
    }

    VertexSet& operator&=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }

    VertexSet& operator|=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] |= other.words_[i];
        trim();
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// Calls fn(v) for every member in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                auto bit = static_cast<unsigned>(std::countr_zero(w));
                fn(static_cast<VertexId>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void check(VertexId v) const {
        if (v >= size_) throw InvalidArgument("vertex id " + std::to_string(v) + " out of range");
    }
    void trim() noexcept {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace vcgraph
