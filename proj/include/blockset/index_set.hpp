#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace blockset {

// Fixed-universe bitset with a cached cardinality. PointSet and LineSet are
// tag-distinguished instantiations so a set of points cannot be passed where
// a set of lines is expected.
template <typename Tag>
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static IndexSet from_indices(int universe, std::span<const int> indices) {
        IndexSet s(universe);
        for (int i : indices) s.set(i);
        return s;
    }

    int universe() const { return universe_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool test(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        uint64_t& w = words_[i >> 6];
        uint64_t bit = uint64_t(1) << (i & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void reset(int i) {
        uint64_t& w = words_[i >> 6];
        uint64_t bit = uint64_t(1) << (i & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    bool intersects(const IndexSet& other) const {
        size_t n = std::min(words_.size(), other.words_.size());
        for (size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count_);
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(int(w * 64 + b));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const IndexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int universe_ = 0;
    std::vector<uint64_t> words_;
    int count_ = 0;
};

struct PointTag {};
struct LineTag {};
using PointSet = IndexSet<PointTag>;
using LineSet = IndexSet<LineTag>;

} // namespace blockset
