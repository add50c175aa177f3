#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

// Half-open interval [lo, hi) of positions. Empty iff lo == hi.
struct Interval {
    Index lo = 0;
    Index hi = 0;

    bool empty() const { return lo >= hi; }
    Index length() const { return empty() ? 0 : hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Canonical union of intervals over the universe [0, universe):
// parts are sorted, nonempty, pairwise disjoint and non-adjacent.
struct IntervalSet {
    Index universe = 0;
    std::vector<Interval> parts;

    Count size() const {
        Count total = 0;
        for (const Interval& iv : parts) total += iv.length();
        return total;
    }
    bool empty() const { return parts.empty(); }
    bool contains(Index x) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

// Arithmetic progression of intervals:
//   base ∪ (base − step) ∪ ... ∪ (base − (count−1)·step), clipped to `clip`.
struct IntervalChain {
    Interval base;
    Index step = 1;
    Index count = 1;
    Interval clip;
};

// Canonical union per family; shared endpoint bucket sort sized to the
// universe, then one counter sweep per family.
std::vector<IntervalSet> union_families(std::span<const std::vector<Interval>> families,
                                        Index universe);

// Convenience wrapper for a single family.
IntervalSet union_family(std::span<const Interval> intervals, Index universe);

IntervalSet intersect_sets(std::span<const IntervalSet> sets, Index universe);

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);

IntervalSet chain_materialize(const IntervalChain& chain);

}  // namespace antipower
