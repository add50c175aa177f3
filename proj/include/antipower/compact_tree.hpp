#pragma once

#include <span>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

// Rooted tree with weighted edges; an edge of weight e hides e-1 implicit
// nodes. Node 0 is the root. Depths are cumulative edge weights.
struct CompactTree {
    std::vector<Index> parent{-1};
    std::vector<Index> depth{0};
    std::vector<std::vector<Index>> children{{}};

    Index size() const { return static_cast<Index>(parent.size()); }

    Index add_node(Index par, Index node_depth) {
        Index id = size();
        parent.push_back(par);
        depth.push_back(node_depth);
        children.emplace_back();
        if (par >= 0) children[par].push_back(id);
        return id;
    }
};

// Explicit or implicit node: the position at string depth `depth` on the
// edge ending in explicit node `below` (explicit iff depth == depth[below]).
struct NodeRef {
    Index below = 0;
    Index depth = 0;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Heavy-path decomposition over explicit nodes; heavy child maximizes the
// number of leaves below, ties broken to the first child. Implicit nodes on
// the light edge above a path's head belong to that path.
struct HeavyPaths {
    std::vector<Index> heavy_child;  // -1 for leaves
    std::vector<Index> head;         // topmost explicit node of the node's path
    std::vector<Index> path_id;
    std::vector<Index> heads;        // head node per path id

    // First (shallowest) depth covered by the path.
    Index base(const CompactTree& t, Index pid) const {
        Index h = heads[pid];
        return t.parent[h] < 0 ? 0 : t.depth[t.parent[h]] + 1;
    }
};

HeavyPaths heavy_paths(const CompactTree& t);

// One equal-length path pair: top -> bottom runs downwards in the first
// tree, bottom_rev -> top_rev upwards in the second. All four are explicit.
struct PathPair {
    Index top = 0;
    Index bottom = 0;
    Index bottom_rev = 0;
    Index top_rev = 0;
};

// Number of distinct aligned (node, node) pairs induced by the path pairs,
// counting implicit nodes. Heavy-path decomposition turns each pair into
// O(log) diagonal segments; segments sharing a (path, path, diagonal) key
// are merged by interval union.
Count solve_ppp(const CompactTree& t, const CompactTree& t_rev,
                std::span<const PathPair> pairs);

}  // namespace antipower
