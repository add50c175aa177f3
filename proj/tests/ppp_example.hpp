#pragma once

// The three-path instance over two 15/14-node trees used as the reference
// fixture for the path-pairs solver. Node labels follow the drawing; label 1
// is the root. All edges have weight 1.

#include <array>
#include <vector>

#include "antipower/compact_tree.hpp"

namespace antipower::testutil {

struct PppExample {
    CompactTree t;
    CompactTree t_rev;
    std::vector<Index> id_t;      // label -> node id
    std::vector<Index> id_rev;
    std::vector<PathPair> pairs;  // pi1, pi2, pi3
};

inline PppExample build_ppp_example() {
    PppExample ex;
    auto build = [](CompactTree& t, std::vector<Index>& ids, int labels,
                    const std::vector<std::pair<int, int>>& edges) {
        ids.assign(labels + 1, -1);
        ids[1] = 0;
        // Insert in edge order; parents appear before children.
        for (auto [p, c] : edges) ids[c] = t.add_node(ids[p], t.depth[ids[p]] + 1);
    };
    build(ex.t, ex.id_t, 15,
          {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 12}, {12, 13}, {13, 14},
           {12, 15}, {4, 7}, {7, 8}, {8, 9}, {9, 10}, {8, 11}});
    build(ex.t_rev, ex.id_rev, 14,
          {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 9}, {6, 10},
           {2, 11}, {11, 12}, {12, 13}, {13, 14}});
    ex.pairs = {
        {ex.id_t[1], ex.id_t[6], ex.id_rev[8], ex.id_rev[3]},
        {ex.id_t[2], ex.id_t[10], ex.id_rev[10], ex.id_rev[1]},
        {ex.id_t[1], ex.id_t[14], ex.id_rev[13], ex.id_rev[1]},
    };
    return ex;
}

}  // namespace antipower::testutil
