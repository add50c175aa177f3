#include "antipower/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipower {

bool IntervalSet::contains(Index x) const {
    auto it = std::upper_bound(parts.begin(), parts.end(), x,
                               [](Index v, const Interval& iv) { return v < iv.lo; });
    if (it == parts.begin()) return false;
    --it;
    return x >= it->lo && x < it->hi;
}

namespace {

struct Event {
    Index pos;
    Index family;
    std::int32_t delta;
};

void check_interval(const Interval& iv, Index universe) {
    if (iv.lo < 0 || iv.hi > universe || iv.lo > iv.hi)
        throw std::invalid_argument("interval out of universe");
}

// Counter sweep over events that are sorted by position. Opens an interval
// when the counter reaches `threshold`, closes when it drops below.
void sweep(std::span<const Event> events, std::int64_t threshold, std::vector<Interval>& out) {
    std::int64_t counter = 0;
    Index open_at = 0;
    std::size_t t = 0;
    while (t < events.size()) {
        Index pos = events[t].pos;
        bool was_open = counter >= threshold;
        while (t < events.size() && events[t].pos == pos) counter += events[t++].delta;
        bool now_open = counter >= threshold;
        if (!was_open && now_open) {
            open_at = pos;
        } else if (was_open && !now_open) {
            if (pos > open_at) out.push_back({open_at, pos});
        }
    }
}

}  // namespace

std::vector<IntervalSet> union_families(std::span<const std::vector<Interval>> families,
                                        Index universe) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    std::size_t total = 0;
    for (const auto& fam : families) {
        for (const Interval& iv : fam) check_interval(iv, universe);
        total += fam.size();
    }

    // Counting sort of all endpoints by position (events per interval: +1 at
    // lo, -1 at hi), then a stable distribution by family index. Stability
    // keeps each family's events position-sorted. Empty intervals are dropped.
    std::vector<Event> by_pos;
    by_pos.resize(2 * total);
    std::size_t used = 0;
    {
        std::vector<Index> bucket(static_cast<std::size_t>(universe) + 2, 0);
        for (const auto& fam : families)
            for (const Interval& iv : fam) {
                if (iv.empty()) continue;
                ++bucket[iv.lo];
                ++bucket[iv.hi];
                used += 2;
            }
        Index run = 0;
        for (auto& b : bucket) {
            Index c = b;
            b = run;
            run += c;
        }
        for (std::size_t f = 0; f < families.size(); ++f)
            for (const Interval& iv : families[f]) {
                if (iv.empty()) continue;
                by_pos[bucket[iv.lo]++] = {iv.lo, static_cast<Index>(f), +1};
                by_pos[bucket[iv.hi]++] = {iv.hi, static_cast<Index>(f), -1};
            }
    }
    by_pos.resize(used);

    std::vector<std::size_t> fam_offset(families.size() + 1, 0);
    for (const Event& e : by_pos) ++fam_offset[static_cast<std::size_t>(e.family) + 1];
    for (std::size_t f = 1; f <= families.size(); ++f) fam_offset[f] += fam_offset[f - 1];
    std::vector<Event> by_family(by_pos.size());
    {
        std::vector<std::size_t> cursor(fam_offset.begin(), fam_offset.end() - 1);
        for (const Event& e : by_pos) by_family[cursor[static_cast<std::size_t>(e.family)]++] = e;
    }

    std::vector<IntervalSet> result(families.size());
    for (std::size_t f = 0; f < families.size(); ++f) {
        result[f].universe = universe;
        std::span<const Event> events{by_family.data() + fam_offset[f],
                                      fam_offset[f + 1] - fam_offset[f]};
        sweep(events, 1, result[f].parts);
    }
    return result;
}

IntervalSet union_family(std::span<const Interval> intervals, Index universe) {
    std::vector<std::vector<Interval>> one(1);
    one[0].assign(intervals.begin(), intervals.end());
    return union_families(one, universe)[0];
}

IntervalSet intersect_sets(std::span<const IntervalSet> sets, Index universe) {
    if (sets.empty()) throw std::invalid_argument("intersection of no sets");
    for (const IntervalSet& s : sets)
        if (s.universe != universe) throw std::invalid_argument("universe mismatch");

    std::vector<Event> events;
    for (const IntervalSet& s : sets)
        for (const Interval& iv : s.parts) {
            events.push_back({iv.lo, 0, +1});
            events.push_back({iv.hi, 0, -1});
        }
    std::vector<Index> bucket(static_cast<std::size_t>(universe) + 2, 0);
    for (const Event& e : events) ++bucket[e.pos];
    Index run = 0;
    for (auto& b : bucket) {
        Index c = b;
        b = run;
        run += c;
    }
    std::vector<Event> sorted(events.size());
    for (const Event& e : events) sorted[bucket[e.pos]++] = e;

    IntervalSet result;
    result.universe = universe;
    sweep(sorted, static_cast<std::int64_t>(sets.size()), result.parts);
    return result;
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
    if (a.universe != b.universe) throw std::invalid_argument("universe mismatch");
    IntervalSet result;
    result.universe = a.universe;
    std::size_t bi = 0;
    for (const Interval& iv : a.parts) {
        Index cur = iv.lo;
        while (bi < b.parts.size() && b.parts[bi].hi <= cur) ++bi;
        std::size_t bj = bi;
        while (cur < iv.hi) {
            if (bj >= b.parts.size() || b.parts[bj].lo >= iv.hi) {
                result.parts.push_back({cur, iv.hi});
                break;
            }
            const Interval& cut = b.parts[bj];
            if (cut.lo > cur) result.parts.push_back({cur, cut.lo});
            cur = std::max(cur, cut.hi);
            ++bj;
        }
    }
    return result;
}

IntervalSet chain_materialize(const IntervalChain& chain) {
    if (chain.step < 1 || chain.count < 1) throw std::invalid_argument("malformed chain");
    const Interval clip = chain.clip;
    std::vector<Interval> terms;
    terms.reserve(static_cast<std::size_t>(chain.count));
    for (Index a = 0; a < chain.count; ++a) {
        std::int64_t lo = static_cast<std::int64_t>(chain.base.lo) -
                          static_cast<std::int64_t>(a) * chain.step;
        std::int64_t hi = static_cast<std::int64_t>(chain.base.hi) -
                          static_cast<std::int64_t>(a) * chain.step;
        lo = std::max<std::int64_t>(lo, clip.lo);
        hi = std::min<std::int64_t>(hi, clip.hi);
        if (lo < hi) terms.push_back({static_cast<Index>(lo), static_cast<Index>(hi)});
    }
    return union_family(terms, clip.hi);
}

}  // namespace antipower
