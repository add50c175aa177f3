#include "antipower/suffix_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "antipower/string_index.hpp"

namespace antipower {

SuffixTree SuffixTree::build(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    SuffixTree st;
    st.text_ = w;
    st.text_.push_back(Symbol{-1});
    StringIndex idx(st.text_);
    const Index n = idx.size();
    const auto& sa = idx.suffix_array();
    const auto& lcp = idx.lcp();

    st.occ_.assign(1, 0);
    st.leaf_of_.assign(n, -1);
    CompactTree& t = st.tree_;

    std::vector<Index> stack{0};  // rightmost path, root at the bottom
    auto depth_of = [&](Index v) { return t.depth[v]; };
    for (Index r = 0; r < n; ++r) {
        Index h = r > 0 ? lcp[r] : 0;
        Index last = -1;
        while (depth_of(stack.back()) > h) {
            last = stack.back();
            stack.pop_back();
        }
        if (depth_of(stack.back()) < h) {
            // Split the edge into `last` with a new branching node.
            Index top = stack.back();
            Index mid = t.add_node(top, h);
            st.occ_.push_back(st.occ_[last]);
            // `last` was the rightmost child of top; mid takes its slot.
            t.children[top].pop_back();
            t.children[top].back() = mid;
            t.parent[last] = mid;
            t.children[mid].push_back(last);
            stack.push_back(mid);
        }
        Index leaf = t.add_node(stack.back(), n - sa[r]);
        st.occ_.push_back(sa[r]);
        st.leaf_of_[sa[r]] = leaf;
        stack.push_back(leaf);
    }
    return st;
}

void SuffixTree::ensure_lifting() const {
    if (!up_.empty()) return;
    const Index n = tree_.size();
    Index levels = std::max<Index>(1, std::bit_width(static_cast<std::uint32_t>(n)));
    up_.assign(levels, std::vector<Index>(n, -1));
    for (Index v = 0; v < n; ++v) up_[0][v] = tree_.parent[v];
    for (Index l = 1; l < levels; ++l)
        for (Index v = 0; v < n; ++v)
            up_[l][v] = up_[l - 1][v] < 0 ? -1 : up_[l - 1][up_[l - 1][v]];
}

NodeRef SuffixTree::locus(Index start, Index len) const {
    const Index n = word_length();
    if (len == 0) return {0, 0};
    if (start < 0 || len < 0 || start + len > n)
        throw std::invalid_argument("locus of a fragment outside the word");
    ensure_lifting();
    Index v = leaf_of_[start];
    for (Index l = static_cast<Index>(up_.size()) - 1; l >= 0; --l) {
        Index u = up_[l][v];
        if (u >= 0 && tree_.depth[u] >= len) v = u;
    }
    return {v, len};
}

std::vector<Index> SuffixTree::make_explicit(std::span<const NodeRef> refs) {
    up_.clear();
    // Collect split depths per edge.
    std::vector<std::pair<Index, Index>> cuts;  // (below, depth)
    for (const NodeRef& r : refs)
        if (r.depth != tree_.depth[r.below]) {
            if (r.depth <= tree_.depth[tree_.parent[r.below]] || r.depth > tree_.depth[r.below])
                throw std::invalid_argument("node reference off its edge");
            cuts.emplace_back(r.below, r.depth);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // (below, depth) -> created node id, filled edge by edge.
    std::vector<std::pair<std::pair<Index, Index>, Index>> created;
    std::size_t i = 0;
    while (i < cuts.size()) {
        Index below = cuts[i].first;
        std::size_t j = i;
        while (j < cuts.size() && cuts[j].first == below) ++j;
        Index par = tree_.parent[below];
        Index slot = -1;
        for (std::size_t s = 0; s < tree_.children[par].size(); ++s)
            if (tree_.children[par][s] == below) slot = static_cast<Index>(s);
        Index prev = par;
        for (std::size_t c = i; c < j; ++c) {
            Index mid = static_cast<Index>(tree_.parent.size());
            tree_.parent.push_back(prev);
            tree_.depth.push_back(cuts[c].second);
            tree_.children.emplace_back();
            occ_.push_back(occ_[below]);
            if (prev == par)
                tree_.children[par][slot] = mid;
            else
                tree_.children[prev].push_back(mid);
            created.push_back({cuts[c], mid});
            prev = mid;
        }
        tree_.parent[below] = prev;
        if (prev != par) tree_.children[prev].push_back(below);
        i = j;
    }

    std::vector<Index> resolved;
    resolved.reserve(refs.size());
    for (const NodeRef& r : refs) {
        if (r.depth == tree_.depth[r.below]) {
            resolved.push_back(r.below);
            continue;
        }
        auto it = std::lower_bound(created.begin(), created.end(),
                                   std::make_pair(std::make_pair(r.below, r.depth), Index{-1}));
        resolved.push_back(it->second);
    }
    return resolved;
}

Count count_depth_divisible(const SuffixTree& st, Index k, Index max_len) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const CompactTree& t = st.tree();
    Count total = 0;
    for (Index v = 1; v < t.size(); ++v) {
        Index lo = t.depth[t.parent[v]];
        Index hi = t.depth[v];
        if (st.is_leaf(v)) --hi;  // the last edge symbol is the sentinel
        hi = std::min(hi, max_len);
        if (hi > lo) total += hi / k - lo / k;
    }
    return total;
}

Index minrot(const Word& w, Index start, Index len) {
    if (len <= 0 || start < 0 || start + len > static_cast<Index>(w.size()))
        throw std::invalid_argument("minrot of an invalid fragment");
    // Booth's least-rotation algorithm on the doubled fragment.
    std::span<const Symbol> s(w.data() + start, static_cast<std::size_t>(len));
    std::vector<Index> f(2 * static_cast<std::size_t>(len), -1);
    Index best = 0;
    for (Index j = 1; j < 2 * len; ++j) {
        Symbol sj = s[j % len];
        Index i = f[j - best - 1];
        while (i != -1 && sj != s[(best + i + 1) % len]) {
            if (sj < s[(best + i + 1) % len]) best = j - i - 1;
            i = f[i];
        }
        if (sj != s[(best + i + 1) % len]) {
            if (sj < s[(best + i + 1) % len]) best = j;
            f[j - best] = -1;
        } else {
            f[j - best] = i + 1;
        }
    }
    return best % len;
}

}  // namespace antipower
