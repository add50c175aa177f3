#pragma once

#include <span>
#include <vector>

#include "antipower/compact_tree.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Suffix tree of w followed by an end-marker sentinel (a symbol below the
// alphabet). Built from the suffix array and LCP array; the root, branching
// nodes and leaves are explicit. Factor counts exclude the sentinel.
class SuffixTree {
  public:
    static SuffixTree build(const Word& w);

    const CompactTree& tree() const { return tree_; }
    const Word& text() const { return text_; }  // includes the sentinel
    Index word_length() const { return static_cast<Index>(text_.size()) - 1; }

    // Occurrence start of the node's path string within text().
    Index occ(Index node) const { return occ_[node]; }
    bool is_leaf(Index node) const { return tree_.children[node].empty(); }
    Index leaf_of(Index suffix) const { return leaf_of_[suffix]; }

    // Locus of the factor w[start, start+len): weighted ancestor of the
    // suffix leaf at string depth len.
    NodeRef locus(Index start, Index len) const;

    // Splits edges so every requested node is explicit; returns the explicit
    // ids aligned with the input. Invalidates previously computed loci
    // machinery, so resolve all loci first.
    std::vector<Index> make_explicit(std::span<const NodeRef> refs);

  private:
    void ensure_lifting() const;

    Word text_;
    CompactTree tree_;
    std::vector<Index> occ_;
    std::vector<Index> leaf_of_;
    mutable std::vector<std::vector<Index>> up_;  // binary lifting, lazy
};

// Number of distinct factors (sentinel excluded) whose length is a positive
// multiple of k, at most max_len.
Count count_depth_divisible(const SuffixTree& st, Index k, Index max_len);

// Offset of the lexicographically least rotation of w[start, start+len);
// ties resolve to the smallest offset.
Index minrot(const Word& w, Index start, Index len);

}  // namespace antipower
