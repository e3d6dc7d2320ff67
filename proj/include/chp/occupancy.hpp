#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

// Occupancy structures over the p slots of an extremal array: which slots
// hold valid points. Two mechanisms: a blocked bit array walked with ctz
// loops, and a w-ary summary tree that skips whole empty subtrees. Both
// support insert and ordered iteration only.
namespace chp::occupancy {

template <typename Word>
concept BitWord = std::unsigned_integral<Word> && !std::same_as<Word, bool>;

// Set-bit positions of x in increasing order; one ctz per set bit.
template <BitWord Word>
std::vector<int> extract_word_positions(Word x) {
    std::vector<int> positions;
    while (x != 0) {
        const int pos = std::countr_zero(x);
        positions.push_back(pos);
        x ^= Word{1} << pos;
    }
    return positions;
}

// Position of the most significant set bit (0-based). x must be non-zero.
template <BitWord Word>
int msb_position(Word x) {
    return std::bit_width(x) - 1;
}

struct BlockPosition {
    std::uint64_t block;
    std::uint32_t position;

    friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

// Maps a 1-based slot index to (block, bit position) for word width w.
// Inverse identity: block * w + position + 1 == i.
inline BlockPosition bit_index_map(std::uint64_t i, std::uint32_t w) {
    const auto shift = static_cast<std::uint32_t>(std::countr_zero(w));
    return {(i - 1) >> shift, static_cast<std::uint32_t>((i - 1) & (w - 1))};
}

// True while extraction stays effectively linear: p < n * (w + 1).
inline bool practical_linearity_check(std::uint64_t n, std::uint64_t p,
                                      std::uint32_t w) {
    return static_cast<unsigned __int128>(p) <
           static_cast<unsigned __int128>(n) * (w + 1);
}

template <BitWord Word>
class BlockedBitset {
  public:
    static constexpr std::uint32_t word_bits = sizeof(Word) * 8;

    explicit BlockedBitset(std::uint64_t p)
        : p_(p), blocks_((p + word_bits - 1) / word_bits, Word{0}) {}

    std::uint64_t size() const { return p_; }
    std::uint64_t block_count() const { return blocks_.size(); }
    const std::vector<Word>& blocks() const { return blocks_; }

    void insert(std::uint64_t i) {
        check_range(i);
        const auto [b, pb] = bit_index_map(i, word_bits);
        blocks_[b] |= Word{1} << pb;
    }

    bool test(std::uint64_t i) const {
        check_range(i);
        const auto [b, pb] = bit_index_map(i, word_bits);
        return (blocks_[b] >> pb) & 1u;
    }

    // Visits set indices in increasing order; O(s + p/w) word visits.
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = 0; b < blocks_.size(); ++b) {
            Word x = blocks_[b];
            while (x != 0) {
                const int pos = std::countr_zero(x);
                x ^= Word{1} << pos;
                f(b * word_bits + pos + 1);
            }
        }
    }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        for_each([&](std::uint64_t i) { out.push_back(i); });
        return out;
    }

  private:
    void check_range(std::uint64_t i) const {
        if (i < 1 || i > p_)
            throw std::out_of_range("BlockedBitset: index out of range");
    }

    std::uint64_t p_;
    std::vector<Word> blocks_;
};

// w-ary occupancy tree: leaves are the blocked bit array; each internal word
// summarizes w child words (bit j set iff child j is non-zero). Levels are
// flat arrays, leaves first. Insert touches height()+1 words; iteration
// descends only into non-zero children.
template <BitWord Word>
class WAryOccupancyTree {
  public:
    static constexpr std::uint32_t word_bits = sizeof(Word) * 8;

    explicit WAryOccupancyTree(std::uint64_t p) : p_(p) {
        std::uint64_t words = (p + word_bits - 1) / word_bits;
        levels_.emplace_back(words, Word{0});
        while (words > 1) {
            words = (words + word_bits - 1) / word_bits;
            levels_.emplace_back(words, Word{0});
        }
    }

    std::uint64_t size() const { return p_; }

    // Levels above the leaves.
    std::uint64_t height() const { return levels_.size() - 1; }

    std::uint64_t total_words() const {
        std::uint64_t total = 0;
        for (const auto& level : levels_) total += level.size();
        return total;
    }

    std::uint64_t leaf_words() const { return levels_.front().size(); }

    void insert(std::uint64_t i) {
        if (i < 1 || i > p_)
            throw std::out_of_range("WAryOccupancyTree: index out of range");
        std::uint64_t idx = i - 1;
        for (auto& level : levels_) {
            const auto [b, pb] = bit_index_map(idx + 1, word_bits);
            level[b] |= Word{1} << pb;
            idx = b;
        }
    }

    bool test(std::uint64_t i) const {
        if (i < 1 || i > p_)
            throw std::out_of_range("WAryOccupancyTree: index out of range");
        const auto [b, pb] = bit_index_map(i, word_bits);
        return (levels_.front()[b] >> pb) & 1u;
    }

    // In-order visit of set leaf indices, skipping empty subtrees.
    template <typename F>
    void for_each(F&& f) const {
        descend(levels_.size() - 1, 0, f);
    }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        for_each([&](std::uint64_t i) { out.push_back(i); });
        return out;
    }

  private:
    template <typename F>
    void descend(std::size_t level, std::uint64_t word_index, F&& f) const {
        Word x = levels_[level][word_index];
        while (x != 0) {
            const int pos = std::countr_zero(x);
            x ^= Word{1} << pos;
            const std::uint64_t child = word_index * word_bits + pos;
            if (level == 0)
                f(child + 1);
            else
                descend(level - 1, child, f);
        }
    }

    std::uint64_t p_;
    std::vector<std::vector<Word>> levels_;
};

enum class Kind { array, tree };

// Runtime-selected occupancy structure, 64-bit words.
class Index {
  public:
    Index(std::uint64_t p, Kind kind)
        : impl_(kind == Kind::array
                    ? Impl{BlockedBitset<std::uint64_t>(p)}
                    : Impl{WAryOccupancyTree<std::uint64_t>(p)}) {}

    Kind kind() const {
        return std::holds_alternative<BlockedBitset<std::uint64_t>>(impl_)
                   ? Kind::array
                   : Kind::tree;
    }

    void insert(std::uint64_t i) {
        std::visit([&](auto& s) { s.insert(i); }, impl_);
    }

    bool test(std::uint64_t i) const {
        return std::visit([&](const auto& s) { return s.test(i); }, impl_);
    }

    template <typename F>
    void for_each(F&& f) const {
        std::visit([&](const auto& s) { s.for_each(f); }, impl_);
    }

    std::vector<std::uint64_t> indices() const {
        return std::visit([](const auto& s) { return s.indices(); }, impl_);
    }

  private:
    using Impl = std::variant<BlockedBitset<std::uint64_t>,
                              WAryOccupancyTree<std::uint64_t>>;
    Impl impl_;
};

}  // namespace chp::occupancy
