#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace r110 {

/// One lattice row: a fixed-width cyclic vector of binary cells,
/// bit-packed into 64-bit words (bit i of word i/64 is cell i).
class Row {
public:
    Row() = default;

    explicit Row(int width) : width_(width) {
        if (width <= 0)
            throw std::invalid_argument("Row width must be positive");
        words_.assign(word_count(width), 0);
    }

    static Row from_string(const std::string& bits) {
        Row r(static_cast<int>(bits.size()));
        for (int i = 0; i < r.width_; ++i) {
            char c = bits[static_cast<size_t>(i)];
            if (c != '0' && c != '1')
                throw std::invalid_argument("Row string must be 0/1 only");
            if (c == '1')
                r.set(i, 1);
        }
        return r;
    }

    int width() const { return width_; }

    int cell(int i) const {
        return static_cast<int>((words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u);
    }

    void set(int i, int v) {
        uint64_t mask = 1ull << (i & 63);
        if (v)
            words_[static_cast<size_t>(i >> 6)] |= mask;
        else
            words_[static_cast<size_t>(i >> 6)] &= ~mask;
    }

    void toggle(int i) { words_[static_cast<size_t>(i >> 6)] ^= 1ull << (i & 63); }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    /// Mask for the (possibly partial) last word; bits past width are always zero.
    uint64_t tail_mask() const {
        int rem = width_ & 63;
        return rem == 0 ? ~0ull : (1ull << rem) - 1;
    }

    int ones() const;

    bool operator==(const Row& o) const = default;

    std::string to_string() const {
        std::string s(static_cast<size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if (cell(i))
                s[static_cast<size_t>(i)] = '1';
        return s;
    }

    static int word_count(int width) { return (width + 63) >> 6; }

private:
    int width_ = 0;
    std::vector<uint64_t> words_;
};

/// Cyclic rotation: cell i of the result is r[(i - k) mod width].
/// Positive k moves contents toward higher indices.
Row rotated(const Row& r, long long k);

/// Cellwise XOR; widths must match.
Row xor_rows(const Row& a, const Row& b);

/// Number of positions where a and b differ.
int hamming(const Row& a, const Row& b);

}  // namespace r110
