#pragma once

#include <vector>

#include "antipower/string_index.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Fixed-length factor identifiers plus next-equal-block tables.
//
// For block length b and offset g in [0, b), the blocks are the fragments
// w[t*b+g, (t+1)*b+g). table(b, g)[t] holds the smallest t' > t whose block
// equals block t, or the sentinel n when none exists. Each (b, g) slice
// carries a range-minimum structure.
class BlockTables {
  public:
    // Builds tables for every b in [1, max_b]. Identifier arrays are kept
    // only when keep_identifiers is set (they cost n cells per length).
    BlockTables(const Word& w, Index max_b, bool keep_identifiers = true,
                bool with_rmq = true);
    // Same tables, with the per-length identifiers read off an existing
    // suffix array instead of iterated prefix-pair sorting.
    BlockTables(const Word& w, Index max_b, const StringIndex& idx,
                bool keep_identifiers, bool with_rmq);

    Index word_length() const { return n_; }
    Index max_b() const { return max_b_; }
    Index sentinel() const { return n_; }

    Index block_count(Index b, Index g) const { return (n_ - g) / b; }
    Index next_equal(Index b, Index g, Index t) const {
        return slices_[slice_index(b, g)].next.values()[t];
    }
    std::vector<Index> table(Index b, Index g) const {
        return slices_[slice_index(b, g)].next.values();
    }

    // Identifier of the length-b factor starting at position pos; equal
    // identifiers iff equal factors. Requires keep_identifiers.
    Index identifier(Index b, Index pos) const;
    // Identifier of block t for offset g.
    Index block_id(Index b, Index t, Index g) const { return identifier(b, t * b + g); }

    // min of table(b, g)[t_lo..t_hi]; empty ranges give the sentinel.
    Index range_min(Index b, Index g, Index t_lo, Index t_hi) const {
        return slices_[slice_index(b, g)].next.min(t_lo, t_hi, sentinel());
    }

    // Total next-table cells, the dominant memory term.
    Count cell_count() const;

  private:
    void init_layout(bool keep_identifiers);
    std::size_t slice_index(Index b, Index g) const {
        return static_cast<std::size_t>(slice_off_[b] + g);
    }

    struct Slice {
        BlockRmq next;
    };

    Index n_ = 0;
    Index max_b_ = 0;
    std::vector<Index> slice_off_;       // per b, offset of its g slices
    std::vector<Slice> slices_;
    std::vector<std::vector<Index>> ids_;  // per b (when kept): identifier per position
};

}  // namespace antipower
