#include "antipower/string_index.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace antipower {

BlockRmq::BlockRmq(std::vector<Index> values) : values_(std::move(values)) {
    blocks_ = static_cast<Index>((values_.size() + kBlock - 1) / kBlock);
    if (blocks_ == 0) return;
    Index levels = std::bit_width(static_cast<std::uint32_t>(blocks_));
    level_off_.assign(static_cast<std::size_t>(levels) + 1, 0);
    for (Index l = 0; l < levels; ++l) level_off_[l + 1] = level_off_[l] + blocks_;
    block_min_.assign(static_cast<std::size_t>(level_off_[levels]), 0);
    for (Index b = 0; b < blocks_; ++b) {
        Index lo = b * kBlock;
        Index hi = std::min<Index>(lo + kBlock, static_cast<Index>(values_.size()));
        Index m = values_[lo];
        for (Index i = lo + 1; i < hi; ++i) m = std::min(m, values_[i]);
        block_min_[b] = m;
    }
    for (Index l = 1; l < levels; ++l) {
        Index span = Index{1} << l;
        for (Index b = 0; b + span <= blocks_; ++b)
            block_min_[level_off_[l] + b] =
                std::min(block_min_[level_off_[l - 1] + b],
                         block_min_[level_off_[l - 1] + b + span / 2]);
    }
}

Index BlockRmq::min(Index lo, Index hi, Index sentinel) const {
    if (lo > hi) return sentinel;
    if (block_min_.empty()) {
        Index m = sentinel;
        for (Index i = lo; i <= hi; ++i) m = std::min(m, values_[i]);
        return m;
    }
    Index bl = lo / kBlock, bh = hi / kBlock;
    Index m = sentinel;
    if (bl == bh) {
        for (Index i = lo; i <= hi; ++i) m = std::min(m, values_[i]);
        return m;
    }
    for (Index i = lo; i < (bl + 1) * kBlock; ++i) m = std::min(m, values_[i]);
    for (Index i = bh * kBlock; i <= hi; ++i) m = std::min(m, values_[i]);
    if (bl + 1 <= bh - 1) {
        Index b1 = bl + 1, b2 = bh - 1;
        Index l = std::bit_width(static_cast<std::uint32_t>(b2 - b1 + 1)) - 1;
        m = std::min(m, block_min_[level_off_[l] + b1]);
        m = std::min(m, block_min_[level_off_[l] + b2 - (Index{1} << l) + 1]);
    }
    return m;
}

std::vector<Index> symbol_ranks(const Word& w) {
    const Index n = static_cast<Index>(w.size());
    std::vector<Index> rank(n);
    if (n == 0) return rank;
    auto [mn_it, mx_it] = std::minmax_element(w.begin(), w.end());
    std::int64_t range = static_cast<std::int64_t>(*mx_it) - *mn_it;
    if (range <= 4 * static_cast<std::int64_t>(n) + 256) {
        Symbol mn = *mn_it;
        std::vector<Index> seen(static_cast<std::size_t>(range) + 1, 0);
        for (Symbol c : w) seen[c - mn] = 1;
        Index r = -1;
        for (auto& s : seen)
            if (s) s = ++r;
        for (Index i = 0; i < n; ++i) rank[i] = seen[w[i] - mn];
    } else {
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Index i = 0; i < n; ++i)
            rank[i] = static_cast<Index>(
                std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin());
    }
    return rank;
}

std::vector<Index> build_suffix_array(const Word& w) {
    const Index n = static_cast<Index>(w.size());
    std::vector<Index> sa(n), rank(n), tmp(n), cnt;
    if (n == 0) return sa;

    rank = symbol_ranks(w);

    std::iota(sa.begin(), sa.end(), 0);
    std::vector<Index> sa2(n);
    for (Index len = 1;; len <<= 1) {
        // Radix sort by (rank[i], rank[i + len]), keys in [0, n].
        auto key2 = [&](Index i) { return i + len < n ? rank[i + len] + 1 : 0; };
        cnt.assign(static_cast<std::size_t>(n) + 2, 0);
        for (Index i = 0; i < n; ++i) ++cnt[key2(i) + 1];
        for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (Index i = 0; i < n; ++i) sa2[cnt[key2(sa[i])]++] = sa[i];

        cnt.assign(static_cast<std::size_t>(n) + 2, 0);
        for (Index i = 0; i < n; ++i) ++cnt[rank[i] + 1];
        for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (Index i = 0; i < n; ++i) sa[cnt[rank[sa2[i]]]++] = sa2[i];

        tmp[sa[0]] = 0;
        Index r = 0;
        for (Index i = 1; i < n; ++i) {
            if (rank[sa[i]] != rank[sa[i - 1]] || key2(sa[i]) != key2(sa[i - 1])) ++r;
            tmp[sa[i]] = r;
        }
        rank.swap(tmp);
        if (r == n - 1) break;
    }
    return sa;
}

StringIndex::StringIndex(const Word& w) : n_(static_cast<Index>(w.size())) {
    sa_ = build_suffix_array(w);
    rank_.assign(n_, 0);
    for (Index r = 0; r < n_; ++r) rank_[sa_[r]] = r;

    // Kasai
    lcp_.assign(n_, 0);
    Index h = 0;
    for (Index i = 0; i < n_; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        Index j = sa_[rank_[i] - 1];
        while (i + h < n_ && j + h < n_ && w[i + h] == w[j + h]) ++h;
        lcp_[rank_[i]] = h;
        if (h > 0) --h;
    }
    rmq_ = BlockRmq(lcp_);
}

Index StringIndex::lce(Index i, Index j) const {
    if (i < 0 || j < 0 || i > n_ || j > n_) throw std::invalid_argument("lce out of range");
    if (i == n_ || j == n_) return 0;
    if (i == j) return n_ - i;
    auto [r1, r2] = std::minmax(rank_[i], rank_[j]);
    return rmq_.min(r1 + 1, r2, n_);
}

LceToolkit::LceToolkit(const Word& w) : word(&w), n(static_cast<Index>(w.size())) {
    forward = StringIndex(w);
    Word rev(w.rbegin(), w.rend());
    backward = StringIndex(rev);
}

}  // namespace antipower
