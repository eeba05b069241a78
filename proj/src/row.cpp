#include "r110/row.hpp"

#include <bit>

namespace r110 {

int Row::ones() const {
    int n = 0;
    for (uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

Row rotated(const Row& r, long long k) {
    int n = r.width();
    long long kk = k % n;
    if (kk < 0)
        kk += n;
    if (kk == 0)
        return r;
    Row out(n);
    for (int i = 0; i < n; ++i) {
        int src = i - static_cast<int>(kk);
        if (src < 0)
            src += n;
        if (r.cell(src))
            out.set(i, 1);
    }
    return out;
}

Row xor_rows(const Row& a, const Row& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("xor_rows: width mismatch");
    Row out = a;
    auto& w = out.words();
    const auto& wb = b.words();
    for (size_t j = 0; j < w.size(); ++j)
        w[j] ^= wb[j];
    return out;
}

int hamming(const Row& a, const Row& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("hamming: width mismatch");
    int n = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t j = 0; j < wa.size(); ++j)
        n += std::popcount(wa[j] ^ wb[j]);
    return n;
}

}  // namespace r110
