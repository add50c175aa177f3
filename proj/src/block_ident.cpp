#include "antipower/block_ident.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipower {

namespace {

// Next-equal tables for one block length from its identifier array, by a
// descending scan through the identifier-indexed array D. D entries are
// t+1 (0 = empty) and are reset after each offset.
void fill_slices(Index n, Index b, std::span<const Index> ids, std::vector<Index>& d_array,
                 bool with_rmq, auto&& store) {
    for (Index g = 0; g < b; ++g) {
        Index blocks = (n - g) / b;
        std::vector<Index> next(blocks);
        for (Index t = blocks - 1; t >= 0; --t) {
            Index x = ids[t * b + g];
            next[t] = d_array[x] == 0 ? n : d_array[x] - 1;
            d_array[x] = t + 1;
        }
        for (Index t = 0; t < blocks; ++t) d_array[ids[t * b + g]] = 0;
        store(g, with_rmq ? BlockRmq(std::move(next)) : BlockRmq::values_only(std::move(next)));
    }
}

}  // namespace

void BlockTables::init_layout(bool keep_identifiers) {
    slice_off_.assign(static_cast<std::size_t>(max_b_) + 2, 0);
    for (Index b = 1; b <= max_b_; ++b) slice_off_[b + 1] = slice_off_[b] + b;
    slices_.resize(static_cast<std::size_t>(slice_off_[max_b_ + 1]));
    if (keep_identifiers) ids_.resize(static_cast<std::size_t>(max_b_) + 1);
}

BlockTables::BlockTables(const Word& w, Index max_b, bool keep_identifiers, bool with_rmq)
    : n_(static_cast<Index>(w.size())), max_b_(max_b) {
    if (max_b < 1 || max_b > n_) throw std::invalid_argument("max_b out of range");
    init_layout(keep_identifiers);

    // Identifiers per length, built from the (prefix id, last symbol id)
    // pairs of the previous length by two counting-sort passes.
    std::vector<Index> id1 = symbol_ranks(w), prev, cur(n_), tmp(n_), cnt;
    prev = id1;
    std::vector<Index> d_array(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<Index> order(n_);

    for (Index b = 1; b <= max_b_; ++b) {
        Index positions = n_ - b + 1;  // starts of length-b factors
        if (b == 1) {
            std::copy(id1.begin(), id1.end(), cur.begin());
        } else {
            // Sort positions by (prev[i], id1[i + b - 1]).
            cnt.assign(static_cast<std::size_t>(n_) + 1, 0);
            for (Index i = 0; i < positions; ++i) ++cnt[id1[i + b - 1]];
            for (std::size_t s = 1; s < cnt.size(); ++s) cnt[s] += cnt[s - 1];
            for (Index i = positions - 1; i >= 0; --i) order[--cnt[id1[i + b - 1]]] = i;

            cnt.assign(static_cast<std::size_t>(n_) + 1, 0);
            for (Index i = 0; i < positions; ++i) ++cnt[prev[i]];
            for (std::size_t s = 1; s < cnt.size(); ++s) cnt[s] += cnt[s - 1];
            for (Index i = positions - 1; i >= 0; --i) tmp[--cnt[prev[order[i]]]] = order[i];

            Index r = 0;
            for (Index i = 0; i < positions; ++i) {
                Index pos = tmp[i];
                if (i > 0) {
                    Index prv = tmp[i - 1];
                    if (prev[pos] != prev[prv] || id1[pos + b - 1] != id1[prv + b - 1]) ++r;
                }
                cur[pos] = r;
            }
        }

        fill_slices(n_, b, std::span(cur.data(), n_), d_array, with_rmq,
                    [&](Index g, BlockRmq rmq) {
                        slices_[slice_index(b, g)].next = std::move(rmq);
                    });
        if (keep_identifiers) ids_[b].assign(cur.begin(), cur.begin() + positions);
        std::swap(prev, cur);
    }
}

BlockTables::BlockTables(const Word& w, Index max_b, const StringIndex& idx,
                         bool keep_identifiers, bool with_rmq)
    : n_(static_cast<Index>(w.size())), max_b_(max_b) {
    if (max_b < 1 || max_b > n_) throw std::invalid_argument("max_b out of range");
    if (idx.size() != n_) throw std::invalid_argument("index built for another word");
    init_layout(keep_identifiers);

    const auto& sa = idx.suffix_array();
    const auto& lcp = idx.lcp();
    std::vector<Index> cur(n_, 0);
    std::vector<Index> d_array(static_cast<std::size_t>(n_) + 1, 0);

    for (Index b = 1; b <= max_b_; ++b) {
        // Walk the suffix array; a new class opens when the LCP chain since
        // the previous length-b-capable suffix drops below b.
        Index cls = -1;
        Index chain_min = 0;
        bool have_prev = false;
        for (Index r = 0; r < n_; ++r) {
            chain_min = r == 0 ? 0 : std::min(chain_min, lcp[r]);
            Index pos = sa[r];
            if (pos + b > n_) continue;
            if (!have_prev || chain_min < b) ++cls;
            cur[pos] = cls;
            have_prev = true;
            chain_min = n_;
        }
        fill_slices(n_, b, std::span(cur.data(), n_), d_array, with_rmq,
                    [&](Index g, BlockRmq rmq) {
                        slices_[slice_index(b, g)].next = std::move(rmq);
                    });
        if (keep_identifiers) ids_[b].assign(cur.begin(), cur.begin() + (n_ - b + 1));
    }
}

Index BlockTables::identifier(Index b, Index pos) const {
    if (ids_.empty()) throw std::logic_error("identifiers were not kept");
    if (b < 1 || b > max_b_ || pos < 0 || pos + b > n_)
        throw std::invalid_argument("identifier out of range");
    return ids_[b][pos];
}

Count BlockTables::cell_count() const {
    Count total = 0;
    for (const Slice& s : slices_) total += static_cast<Count>(s.next.values().size());
    return total;
}

}  // namespace antipower
