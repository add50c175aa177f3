#include "antipower/distinct.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "antipower/periodicity.hpp"
#include "antipower/string_index.hpp"
#include "antipower/suffix_tree.hpp"

namespace antipower {

Count count_distinct_squares(const Word& w) {
    if (w.empty()) return 0;
    LceToolkit tk(w);
    std::vector<Run> runs = compute_runs(w, tk);

    // Rotation-class anchors: position of the Lyndon-rotation start of each
    // run's period factor; equal period factors up to rotation share a class.
    std::vector<std::pair<Index, Index>> anchors;  // (period, anchor position)
    anchors.reserve(runs.size());
    for (const Run& r : runs)
        anchors.emplace_back(r.period, r.start + minrot(w, r.start, r.period));
    std::vector<std::size_t> order(runs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const auto& rank = tk.forward.rank();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (anchors[a].first != anchors[b].first) return anchors[a].first < anchors[b].first;
        return rank[anchors[a].second] < rank[anchors[b].second];
    });
    std::vector<Index> cls(runs.size());
    Index next_cls = -1;
    for (std::size_t t = 0; t < order.size(); ++t) {
        bool fresh = t == 0 || anchors[order[t]].first != anchors[order[t - 1]].first ||
                     tk.forward.lce(anchors[order[t]].second, anchors[order[t - 1]].second) <
                         anchors[order[t]].first;
        if (fresh) ++next_cls;
        cls[order[t]] = next_cls;
    }

    // A square of length 2tp inside a run contributes one distinct factor
    // per rotation offset it realizes.
    std::vector<std::tuple<Index, Index, Index, Index>> seen;  // (class, p, t, offset)
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Run& r = runs[i];
        const Index p = r.period;
        const Index len = r.length();
        const Index a_anchor = anchors[i].second;
        for (Index t = 1; 2 * t * p <= len; ++t) {
            Index occurrences = len - 2 * t * p + 1;
            Index distinct = std::min(p, occurrences);
            for (Index s = r.start; s < r.start + distinct; ++s) {
                Index offset = (s - a_anchor) % p;
                if (offset < 0) offset += p;
                seen.emplace_back(cls[i], p, t, offset);
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<Count>(seen.size());
}

Count count_distinct_antisquares(const Word& w) {
    if (w.empty()) return 0;
    SuffixTree st = SuffixTree::build(w);
    Count even = count_depth_divisible(st, 2, static_cast<Index>(w.size()));
    return even - count_distinct_squares(w);
}

Index synch_offset(Index a, const Generator& gen, int k, Index d) {
    Index offset = gen.start - a;
    if (offset < 0 || offset >= static_cast<Index>(k) * d)
        throw std::logic_error("synchronizer offset out of range");
    return offset;
}

std::vector<ZeroPiece> zero_partition(const Generator& gen, int k, Index j, Index d,
                                      std::span<const Interval> intervals, const Word& w) {
    if (j < 1 || gen.period != j * d) throw std::logic_error("generator period must be j*d");
    const Index kd = static_cast<Index>(k) * d;

    // Rotation-anchor spacing of the period prefix: its primitive root
    // length. When the prefix is a proper power, equal factors recur every
    // rho positions (not every period), so the class boundaries follow rho.
    Index rho = gen.period;
    for (Index cand = 1; cand < gen.period; ++cand) {
        if (gen.period % cand != 0) continue;
        bool periodic = true;
        for (Index t = 0; t + cand < gen.period && periodic; ++t)
            periodic = w[gen.start + t] == w[gen.start + t + cand];
        if (periodic) {
            rho = cand;
            break;
        }
    }
    const Index mr = minrot(w, gen.start, gen.period);  // first tie, below rho

    // Inclusive bounds of the position classes within the generator.
    const Index j1_hi = gen.end - kd + 1;  // occurrences fully inside
    const Index fresh_hi = std::min(j1_hi, gen.start + rho - 1);
    const Index i1_hi = std::min(fresh_hi, gen.start + mr);
    std::vector<ZeroPiece> out;
    auto add = [&](Index lo, Index hi, int tag, Index anchor) {
        for (const Interval& iv : intervals) {
            Index a = std::max(iv.lo, lo);
            Index b = std::min<Index>(iv.hi - 1, hi);
            if (a <= b) out.push_back({{a, b + 1}, tag, anchor});
        }
    };
    add(gen.start, i1_hi, 1, gen.start + mr);
    add(i1_hi + 1, fresh_hi, 2, gen.start + mr + rho);
    // Positions in (fresh_hi, j1_hi] recur rho positions earlier; dropped.
    add(j1_hi + 1, gen.end, 4, gen.end);
    return out;
}

PppInstance reduce_to_ppp(const Word& w, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const Index n = static_cast<Index>(w.size());
    LceToolkit tk(w);
    std::vector<WeakPowKijEntry> classified = weakpow_kij(w, k, tk);

    SuffixTree st = SuffixTree::build(w);
    Word rev(w.rbegin(), w.rend());
    SuffixTree str = SuffixTree::build(rev);

    // Path endpoints as loci; resolved to explicit nodes afterwards.
    std::vector<NodeRef> refs_t, refs_r;
    for (const WeakPowKijEntry& entry : classified) {
        const Index kd = static_cast<Index>(k) * entry.d;
        auto add_piece = [&](Index a, Index b, Index anchor) {
            refs_t.push_back(st.locus(anchor, a + kd - anchor));
            refs_t.push_back(st.locus(anchor, b + kd - anchor));
            refs_r.push_back(str.locus(n - anchor, anchor - a));
            refs_r.push_back(str.locus(n - anchor, anchor - b));
        };
        for (const LabeledInterval& li : entry.intervals) {
            if (entry.i > 0) {
                Index a = li.iv.lo, b = li.iv.hi - 1;
                synch_offset(b, li.gen, k, entry.d);  // contract check, both ends
                synch_offset(a, li.gen, k, entry.d);
                add_piece(a, b, li.gen.start);
            } else {
                for (const ZeroPiece& piece :
                     zero_partition(li.gen, k, entry.j, entry.d,
                                    std::span(&li.iv, 1), w))
                    add_piece(piece.iv.lo, piece.iv.hi - 1, piece.anchor);
            }
        }
    }

    std::vector<Index> ids_t = st.make_explicit(refs_t);
    std::vector<Index> ids_r = str.make_explicit(refs_r);

    PppInstance inst;
    inst.t = st.tree();
    inst.t_rev = str.tree();
    inst.pairs.reserve(ids_t.size() / 2);
    for (std::size_t p = 0; p < ids_t.size(); p += 2)
        inst.pairs.push_back({ids_t[p], ids_t[p + 1], ids_r[p], ids_r[p + 1]});
    return inst;
}

Count count_distinct_antipowers(const Word& w, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (w.empty()) return 0;
    const Index n = static_cast<Index>(w.size());
    if (n < k) return 0;
    SuffixTree st = SuffixTree::build(w);
    Count divisible = count_depth_divisible(st, k, n);
    PppInstance inst = reduce_to_ppp(w, k);
    return divisible - solve_ppp(inst.t, inst.t_rev, inst.pairs);
}

}  // namespace antipower
