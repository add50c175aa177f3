#pragma once

#include <vector>

#include "antipower/compact_tree.hpp"
#include "antipower/squares_weakpow.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Number of distinct square factors (enumerated from runs, de-duplicated by
// rotation class of the primitive root and length).
Count count_distinct_squares(const Word& w);

// Distinct even-length factors minus distinct squares.
Count count_distinct_antisquares(const Word& w);

// Synchronizer offset for weak (k,i,j,d)-powers with i > 0: the generator
// start is a fixed anchor, so the offset is start(gen) - a. Throws when the
// offset leaves [0, kd).
Index synch_offset(Index a, const Generator& gen, int k, Index d);

// One piece of a zero-case partition: positions `iv` of weak (k,0,j,d)-
// powers sharing the anchor `anchor` = a + synch(a).
struct ZeroPiece {
    Interval iv;
    int tag = 0;  // 1, 2 or 4
    Index anchor = 0;
};

// Partition of WeakPow_{k,0,j}(d, gen) intervals into anchor classes. The
// class of positions that repeat one generator period later is dropped:
// those factors occur again in the first two classes.
std::vector<ZeroPiece> zero_partition(const Generator& gen, int k, Index j, Index d,
                                      std::span<const Interval> intervals, const Word& w);

// Path-pair instance whose induced node-pair union counts distinct weak
// k-power factors: t is the suffix tree of w, t_rev of the reversed word,
// with all path endpoints made explicit.
struct PppInstance {
    CompactTree t;
    CompactTree t_rev;
    std::vector<PathPair> pairs;
};

PppInstance reduce_to_ppp(const Word& w, int k);

// Distinct factors of length divisible by k, minus distinct weak k-power
// factors (via the path-pairs instance).
Count count_distinct_antipowers(const Word& w, int k);

}  // namespace antipower
