#ifndef TPK_BITSET_HPP
#define TPK_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tpk/kernels.hpp"

namespace tpk {

// Fixed-capacity bit set over vertex indices [0, capacity). Bits past the
// capacity are kept zero so word-level popcounts are exact.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(uint32_t capacity)
        : capacity_(capacity), w_((capacity + 63) / 64, 0) {}

    static VertexSet of(uint32_t capacity, std::initializer_list<uint32_t> members) {
        VertexSet s(capacity);
        for (uint32_t v : members) s.add(v);
        return s;
    }
    static VertexSet full(uint32_t capacity) {
        VertexSet s(capacity);
        for (auto& w : s.w_) w = ~0ull;
        s.trim();
        return s;
    }

    uint32_t capacity() const { return capacity_; }
    bool contains(uint32_t v) const {
        assert(v < capacity_);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void add(uint32_t v) {
        assert(v < capacity_);
        w_[v >> 6] |= 1ull << (v & 63);
    }
    void remove(uint32_t v) {
        assert(v < capacity_);
        w_[v >> 6] &= ~(1ull << (v & 63));
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    uint32_t size() const {
        return (uint32_t)kernels::active().popcount(w_.data(), w_.size());
    }
    bool empty() const { return kernels::active().is_zero(w_.data(), w_.size()); }

    VertexSet& operator&=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        kernels::active().and_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        kernels::active().or_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        kernels::active().andnot_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    VertexSet complement() const {
        VertexSet s(capacity_);
        for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const {
        return capacity_ == o.capacity_ &&
               kernels::active().equals(w_.data(), o.w_.data(), w_.size());
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        return kernels::active().is_subset(w_.data(), o.w_.data(), w_.size());
    }
    bool intersects(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        return kernels::active().intersects(w_.data(), o.w_.data(), w_.size());
    }
    bool intersects(std::span<const uint64_t> row) const {
        assert(row.size() == w_.size());
        return kernels::active().intersects(w_.data(), row.data(), w_.size());
    }
    uint32_t intersection_size(std::span<const uint64_t> row) const {
        assert(row.size() == w_.size());
        return (uint32_t)kernels::active().and_popcount(w_.data(), row.data(), w_.size());
    }

    // Lowest set index >= from, or capacity when none.
    uint32_t next(uint32_t from = 0) const {
        if (from >= capacity_) return capacity_;
        uint32_t wi = from >> 6;
        uint64_t w = w_[wi] & (~0ull << (from & 63));
        while (true) {
            if (w) return (uint32_t)(wi * 64 + std::countr_zero(w));
            if (++wi >= w_.size()) return capacity_;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f((uint32_t)(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> out;
        out.reserve(size());
        for_each([&](uint32_t v) { out.push_back(v); });
        return out;
    }

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

private:
    void trim() {
        if (capacity_ & 63) w_.back() &= (~0ull >> (64 - (capacity_ & 63)));
        if (capacity_ == 0 && !w_.empty()) w_.back() = 0;
    }

    uint32_t capacity_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace tpk

#endif
