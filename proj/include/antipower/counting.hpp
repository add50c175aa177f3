#pragma once

#include <vector>

#include "antipower/intervals.hpp"
#include "antipower/squares_weakpow.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Axis-aligned rectangle in the grid G_d (cell (row, col) is position
// row*d + col). Half-open on both axes; height at most k or width exactly d.
struct GridRect {
    Index row_lo = 0;
    Index row_hi = 0;
    Index col_lo = 0;
    Index col_hi = 0;

    friend bool operator==(const GridRect&, const GridRect&) = default;
};

// Decomposes one interval chain (step d, clip [0, n-kd+1)) into O(1)
// rectangles whose cell union is the chain's position set.
std::vector<GridRect> chain_to_rects(const IntervalChain& chain, Index d, Index n, int k);

// Number of grid cells covered by the rectangle union. Strips of k rows are
// swept left to right with a range tree each; width-d rectangles are merged
// into a vertical union and preinserted.
Count rect_union_area(std::span<const GridRect> rects, Index d, int k,
                      Index universe_cells);

struct CountResult {
    Count total = 0;
    std::vector<std::pair<Index, Count>> per_d;  // (base, antipower count)
};

// Antipower fragment counts per base via chain representations, grid
// rectangles, row renumbering and strip sweeps. `threads` 0 picks the
// hardware concurrency; results are independent of it.
CountResult count_antipowers(const Word& w, int k, int threads = 1);

// Reference counter: materializes every chain with interval-set unions.
CountResult count_antipowers_simple(const Word& w, int k);

// All antipower fragments, grouped by base in increasing start order.
// `only_d` restricts to one base (0 = all).
std::vector<Fragment> report_antipowers(const Word& w, int k, Index only_d = 0,
                                        int threads = 1);

}  // namespace antipower
