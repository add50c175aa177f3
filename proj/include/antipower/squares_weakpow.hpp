#pragma once

#include <vector>

#include "antipower/block_ident.hpp"
#include "antipower/intervals.hpp"
#include "antipower/periodicity.hpp"
#include "antipower/string_index.hpp"
#include "antipower/word.hpp"

namespace antipower {

enum class GeneratorKind { MaximalGappedRepeat, GeneralizedRun };

// Periodic structure that generates gapped squares: a maximal fragment
// [start, end] with period `period` (an MGR when shorter than two periods,
// a generalized run otherwise).
struct Generator {
    GeneratorKind kind = GeneratorKind::GeneralizedRun;
    Index start = 0;
    Index end = 0;  // inclusive
    Index period = 0;

    Index length() const { return end - start + 1; }

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator generator_of(const GeneralizedRun& g) {
    return {GeneratorKind::GeneralizedRun, g.start, g.end, g.period};
}
inline Generator generator_of(const GappedRepeat& g) {
    return {GeneratorKind::MaximalGappedRepeat, g.start, g.end(), g.period};
}

struct LabeledInterval {
    Interval iv;
    Generator gen;
};

// Start positions of the gapped (q,d)-squares generated by `gen`
// (which must have period (q+1)*d): the fragment's first length-(q+2)d
// windows. Empty when the fragment is shorter than (q+2)d.
Interval squares_interval(const Generator& gen, Index q, Index d);

// Interval representation of all gapped (q,d)-square start positions,
// assembled from maximal gapped repeats and generalized runs of period
// (q+1)d.
IntervalSet squares_rep(const Word& w, Index q, Index d, const LceToolkit& tk);
IntervalSet squares_rep(const Word& w, Index q, Index d);

// Start positions of gapped (q,d)-squares as disjoint generator-labeled
// intervals, by a left-to-right scan that jumps over each generator's
// interval. Used where downstream processing needs the generator identity.
std::vector<LabeledInterval> labeled_squares(const Word& w, Index q, Index d,
                                             const LceToolkit& tk);

// Chain representations of WeakPow_k(d) for d in [1, n/k]; entry [d] lists
// the chains (entry [0] is unused). Bases below 2k-2 come from a direct
// per-base scan over block tables, larger bases from generalized runs and
// the gapped repeats that are nice for the relevant alpha.
std::vector<std::vector<IntervalChain>> weakpow_chains(const Word& w, int k,
                                                       const LceToolkit& tk);
std::vector<std::vector<IntervalChain>> weakpow_chains(const Word& w, int k);

// WeakPow_{k,i,j}(d): weak (k,d)-powers classified by their leftmost equal
// block pair (i, j), as generator-labeled interval representations.
struct WeakPowKijEntry {
    Index i = 0;
    Index j = 0;
    Index d = 0;
    std::vector<LabeledInterval> intervals;
};

std::vector<WeakPowKijEntry> weakpow_kij(const Word& w, int k, const LceToolkit& tk);
std::vector<WeakPowKijEntry> weakpow_kij(const Word& w, int k);

}  // namespace antipower
