#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

// Range-minimum structure: block minima plus a sparse table over them,
// in-block ranges are scanned directly. Linear space, near-constant query.
class BlockRmq {
  public:
    BlockRmq() = default;
    explicit BlockRmq(std::vector<Index> values);

    // Holds the values without the query structure; min() degrades to a
    // linear scan. For tables that are only ever read element-wise.
    static BlockRmq values_only(std::vector<Index> values) {
        BlockRmq r;
        r.values_ = std::move(values);
        return r;
    }

    // Minimum of values[lo..hi], inclusive; `hi < lo` yields sentinel.
    Index min(Index lo, Index hi, Index sentinel) const;

    const std::vector<Index>& values() const { return values_; }

  private:
    static constexpr Index kBlock = 32;
    std::vector<Index> values_;
    std::vector<Index> block_min_;   // levels of the sparse table, concatenated
    std::vector<Index> level_off_;
    Index blocks_ = 0;
};

// Suffix array + inverse + LCP array with an RMQ for longest common
// extension queries between suffixes.
class StringIndex {
  public:
    StringIndex() = default;
    explicit StringIndex(const Word& w);

    Index size() const { return n_; }
    const std::vector<Index>& suffix_array() const { return sa_; }
    const std::vector<Index>& rank() const { return rank_; }
    const std::vector<Index>& lcp() const { return lcp_; }  // lcp_[r] = lcp(sa[r-1], sa[r])

    // Length of the longest common prefix of suffixes starting at i and j.
    Index lce(Index i, Index j) const;

  private:
    Index n_ = 0;
    std::vector<Index> sa_;
    std::vector<Index> rank_;
    std::vector<Index> lcp_;
    BlockRmq rmq_;
};

// Forward and backward LCE oracles over one word, built once and shared by
// the periodicity and weak-power pipelines.
struct LceToolkit {
    explicit LceToolkit(const Word& w);

    const Word* word;
    Index n;
    StringIndex forward;
    StringIndex backward;  // index of the reversed word

    // Longest match extending right from (i, j): w[i..i+r) == w[j..j+r).
    // Short extensions are resolved by direct comparison; long ones fall
    // back to the suffix-array range minimum.
    Index extend_right(Index i, Index j) const {
        if (i >= n || j >= n) return 0;
        const Word& w = *word;
        Index limit = std::min(kProbe, n - std::max(i, j));
        for (Index t = 0; t < limit; ++t)
            if (w[i + t] != w[j + t]) return t;
        if (limit < kProbe) return limit;
        return kProbe + forward.lce(i + kProbe, j + kProbe);
    }
    // Longest match extending left from inclusive ends (i, j):
    // w(i-r..i] == w(j-r..j].
    Index extend_left(Index i, Index j) const {
        if (i < 0 || j < 0) return 0;
        const Word& w = *word;
        Index limit = std::min(kProbe, std::min(i, j) + 1);
        for (Index t = 0; t < limit; ++t)
            if (w[i - t] != w[j - t]) return t;
        if (limit < kProbe) return limit;
        return kProbe + backward.lce(n - 1 - (i - kProbe), n - 1 - (j - kProbe));
    }

    static constexpr Index kProbe = 16;
};

// Suffix array of a word over any integer alphabet (values are rank
// compressed first). Exposed for reuse in suffix tree construction.
std::vector<Index> build_suffix_array(const Word& w);

// Dense ranks of the symbols (equal symbols share a rank, ranks ordered as
// the symbols). Counting sort for dense alphabets, comparison sort otherwise.
std::vector<Index> symbol_ranks(const Word& w);

}  // namespace antipower
