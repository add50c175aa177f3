#include "antipower/compact_tree.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <tuple>

namespace antipower {

HeavyPaths heavy_paths(const CompactTree& t) {
    const Index n = t.size();
    HeavyPaths hp;
    hp.heavy_child.assign(n, -1);
    hp.head.assign(n, 0);
    hp.path_id.assign(n, 0);

    std::vector<Count> leaves(n, 0);
    // Children precede parents in creation order only for freshly built
    // trees; use an explicit post-order to stay general.
    std::vector<Index> order;
    order.reserve(n);
    std::vector<Index> stack{0};
    while (!stack.empty()) {
        Index v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Index c : t.children[v]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Index v = *it;
        if (t.children[v].empty()) {
            leaves[v] = 1;
            continue;
        }
        Count best = -1;
        for (Index c : t.children[v]) {
            leaves[v] += leaves[c];
            if (leaves[c] > best) {
                best = leaves[c];
                hp.heavy_child[v] = c;
            }
        }
    }
    for (Index v : order) {
        if (v == 0 || hp.heavy_child[t.parent[v]] != v) {
            hp.head[v] = v;
            hp.path_id[v] = static_cast<Index>(hp.heads.size());
            hp.heads.push_back(v);
        } else {
            hp.head[v] = hp.head[t.parent[v]];
            hp.path_id[v] = hp.path_id[t.parent[v]];
        }
    }
    return hp;
}

namespace {

// Maximal fragments of one root-ward chain lying on single heavy paths.
struct ChainSeg {
    Index pid;
    Index depth_lo;
    Index depth_hi;
};

// Splits the depth range [d_top, d_bot] of the chain ending at explicit node
// `bottom` (depth d_bot) by heavy paths, bottom-up. `top` is the explicit
// node at depth d_top and is used to validate ancestry.
void decompose_chain(const CompactTree& t, const HeavyPaths& hp, Index top, Index bottom,
                     Index d_top, Index d_bot, std::vector<ChainSeg>& out) {
    Index v = bottom;
    Index d = d_bot;
    while (true) {
        Index pid = hp.path_id[v];
        Index lo = std::max(d_top, hp.base(t, pid));
        out.push_back({pid, lo, d});
        if (lo == d_top) {
            if (hp.path_id[top] != pid)
                throw std::logic_error("path pair endpoints are not on one chain");
            return;
        }
        v = t.parent[hp.heads[pid]];
        if (v < 0) throw std::logic_error("path pair endpoints are not on one chain");
        d = t.depth[v];
    }
}

struct DiagSeg {
    Index pid1;
    Index pid2;
    Index diag;
    Index v_lo;
    Index v_hi;

    friend auto operator<=>(const DiagSeg&, const DiagSeg&) = default;
};

}  // namespace

Count solve_ppp(const CompactTree& t, const CompactTree& t_rev,
                std::span<const PathPair> pairs) {
    HeavyPaths hp1 = heavy_paths(t);
    HeavyPaths hp2 = heavy_paths(t_rev);

    std::vector<DiagSeg> segs;
    std::vector<ChainSeg> c1, c2;
    for (const PathPair& pr : pairs) {
        Index len = t.depth[pr.bottom] - t.depth[pr.top];
        if (len != t_rev.depth[pr.bottom_rev] - t_rev.depth[pr.top_rev] || len < 0)
            throw std::logic_error("path pair lengths differ");
        const Index d1 = t.depth[pr.top];       // T depth at t = 0
        const Index d2 = t_rev.depth[pr.bottom_rev];  // T' depth at t = 0

        c1.clear();
        c2.clear();
        decompose_chain(t, hp1, pr.top, pr.bottom, d1, d1 + len, c1);
        decompose_chain(t_rev, hp2, pr.top_rev, pr.bottom_rev, d2 - len, d2, c2);

        // c1 is bottom-up: t decreasing. c2 is bottom-up: t increasing.
        std::size_t i1 = c1.size();  // walk c1 from the back (t ascending)
        std::size_t i2 = 0;
        Index tcur = 0;
        while (tcur <= len) {
            const ChainSeg& s1 = c1[i1 - 1];
            const ChainSeg& s2 = c2[i2];
            Index t1_hi = s1.depth_hi - d1;           // t range of s1
            Index t2_hi = d2 - s2.depth_lo;           // t range of s2
            Index tend = std::min(t1_hi, t2_hi);
            Index x = d1 + tcur - hp1.base(t, s1.pid);
            Index y = d2 - tcur - hp2.base(t_rev, s2.pid);
            segs.push_back({s1.pid, s2.pid, x + y, x, x + (tend - tcur)});
            tcur = tend + 1;
            if (tcur > len) break;
            if (t1_hi == tend) --i1;
            if (t2_hi == tend) ++i2;
        }
    }

    std::sort(segs.begin(), segs.end());
    Count total = 0;
    std::size_t i = 0;
    while (i < segs.size()) {
        std::size_t j = i;
        Index reach = -1;
        while (j < segs.size() && segs[j].pid1 == segs[i].pid1 && segs[j].pid2 == segs[i].pid2 &&
               segs[j].diag == segs[i].diag) {
            Index lo = std::max(segs[j].v_lo, reach + 1);
            if (segs[j].v_hi >= lo) {
                total += segs[j].v_hi - lo + 1;
                reach = segs[j].v_hi;
            }
            ++j;
        }
        i = j;
    }
    return total;
}

}  // namespace antipower
