#include "antipower/squares_weakpow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace antipower {

Interval squares_interval(const Generator& gen, Index q, Index d) {
    if (gen.period != (q + 1) * d)
        throw std::logic_error("generator period does not match (q+1)*d");
    Index len = gen.length();
    Index span = gen.period + d;  // length of one gapped (q,d)-square
    if (len < span) return {gen.start, gen.start};
    return {gen.start, gen.start + len - span + 1};
}

IntervalSet squares_rep(const Word& w, Index q, Index d, const LceToolkit& tk) {
    if (q < 0 || d < 1) throw std::invalid_argument("bad (q, d)");
    const Index n = tk.n;
    const Index p = (q + 1) * d;
    std::vector<Interval> pieces;
    if (p + d <= n) {
        for (const GeneralizedRun& g : generalized_runs(w, tk))
            if (g.period == p) {
                Interval iv = squares_interval(generator_of(g), q, d);
                if (!iv.empty()) pieces.push_back(iv);
            }
        if (q >= 1)  // a (q+1)-MGR needs a nonempty gap, so q = 0 has none
            for (const GappedRepeat& g : mgreps(w, {q + 1, 1}, tk))
                if (g.period == p && g.arm_len >= d) {
                    Interval iv = squares_interval(generator_of(g), q, d);
                    if (!iv.empty()) pieces.push_back(iv);
                }
    }
    return union_family(pieces, n);
}

std::vector<LabeledInterval> labeled_squares(const Word&, Index q, Index d,
                                             const LceToolkit& tk) {
    const Index n = tk.n;
    const Index p = (q + 1) * d;
    std::vector<LabeledInterval> out;
    Index a = 0;
    while (a + p + d <= n) {
        Index f = tk.extend_right(a, a + p);
        if (f < d) {
            ++a;
            continue;
        }
        Index b = a > 0 ? tk.extend_left(a - 1, a + p - 1) : 0;
        Index s = a - b;
        Index e = a + p + f - 1;
        Generator gen{(e - s + 1 >= 2 * p) ? GeneratorKind::GeneralizedRun
                                           : GeneratorKind::MaximalGappedRepeat,
                      s, e, p};
        Interval iv = squares_interval(gen, q, d);
        out.push_back({{std::max(iv.lo, a), iv.hi}, gen});
        a = iv.hi;
    }
    return out;
}

namespace {

// WeakPow_k(d) for one base below 2k-2, by the next-equal-block criterion:
// a = t0*d + g starts a weak power iff some block in [t0, t0+k-2] has its
// next equal block within [.., t0+k-1]. Sliding-window minimum per offset.
IntervalSet weakpow_small_base(const Word& w, int k, Index d, const BlockTables& tables) {
    const Index n = static_cast<Index>(w.size());
    const Index m = n - k * d + 1;
    std::vector<std::uint8_t> weak(m, 0);
    std::deque<Index> window;
    for (Index g = 0; g < d; ++g) {
        const Index t_max = (n - g) / d - k;  // last usable t0
        if (t_max < 0) continue;
        window.clear();
        auto push = [&](Index t) {
            Index v = tables.next_equal(d, g, t);
            while (!window.empty() && tables.next_equal(d, g, window.back()) >= v)
                window.pop_back();
            window.push_back(t);
        };
        for (Index t = 0; t < k - 1; ++t) push(t);
        for (Index t0 = 0; t0 <= t_max; ++t0) {
            if (t0 > 0) {
                if (window.front() < t0) window.pop_front();
                push(t0 + k - 2);
            }
            if (tables.next_equal(d, g, window.front()) <= t0 + k - 1)
                weak[t0 * d + g] = 1;
        }
    }
    std::vector<Interval> pieces;
    Index run_start = -1;
    for (Index x = 0; x <= m; ++x) {
        bool on = x < m && weak[x];
        if (on && run_start < 0) run_start = x;
        if (!on && run_start >= 0) {
            pieces.push_back({run_start, x});
            run_start = -1;
        }
    }
    IntervalSet set;
    set.universe = m;
    set.parts = std::move(pieces);
    return set;
}

}  // namespace

std::vector<std::vector<IntervalChain>> weakpow_chains(const Word& w, int k,
                                                       const LceToolkit& tk) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const Index n = tk.n;
    const Index max_d = n / k;
    std::vector<std::vector<IntervalChain>> chains(static_cast<std::size_t>(max_d) + 1);
    if (max_d == 0) return chains;

    const Index small_limit = std::min<Index>(max_d, 2 * k - 3);  // bases below 2k-2
    if (small_limit >= 1) {
        BlockTables tables(w, small_limit, tk.forward,
                           /*keep_identifiers=*/false, /*with_rmq=*/false);
        for (Index d = 1; d <= small_limit; ++d) {
            IntervalSet set = weakpow_small_base(w, k, d, tables);
            for (const Interval& iv : set.parts)
                chains[d].push_back({iv, d, 1, {0, set.universe}});
        }
    }

    if (max_d >= 2 * k - 2) {
        std::unordered_map<Index, std::vector<GeneralizedRun>> gruns_by_p;
        for (const GeneralizedRun& g : generalized_runs(w, tk, 2 * k - 2))
            gruns_by_p[g.period].push_back(g);
        auto mgrs_by_p = mgreps_by_period(w, k, 2 * k - 2, max_d, tk);

        for (Index d = 2 * k - 2; d <= max_d; ++d) {
            const Interval clip{0, n - k * d + 1};
            for (Index q = 0; q <= k - 2; ++q) {
                const Index p = (q + 1) * d;
                if (p + d > n) break;
                if (auto it = gruns_by_p.find(p); it != gruns_by_p.end())
                    for (const GeneralizedRun& g : it->second) {
                        Interval iv = squares_interval(generator_of(g), q, d);
                        if (!iv.empty()) chains[d].push_back({iv, d, k - q - 1, clip});
                    }
                if (q >= 1)
                    if (auto it = mgrs_by_p.find(p); it != mgrs_by_p.end())
                        for (const GappedRepeat& g : it->second) {
                            if (g.arm_len < d) continue;
                            Interval iv = squares_interval(generator_of(g), q, d);
                            if (!iv.empty()) chains[d].push_back({iv, d, k - q - 1, clip});
                        }
            }
        }
    }
    return chains;
}

std::vector<WeakPowKijEntry> weakpow_kij(const Word& w, int k, const LceToolkit& tk) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const Index n = tk.n;
    const Index max_d = n / k;
    std::vector<WeakPowKijEntry> out;

    std::vector<std::vector<LabeledInterval>> squares(static_cast<std::size_t>(k - 1));
    std::vector<std::vector<Interval>> plain(static_cast<std::size_t>(k - 1));
    for (Index d = 1; d <= max_d; ++d) {
        const Index m = n - k * d + 1;
        for (Index q = 0; q <= k - 2; ++q) {
            squares[q] = labeled_squares(w, q, d, tk);
            plain[q].clear();
            for (const LabeledInterval& li : squares[q]) plain[q].push_back(li.iv);
        }

        for (Index i = 0; i < k; ++i) {
            for (Index j = i + 1; j < k; ++j) {
                const Index q = j - i - 1;
                if (squares[q].empty()) continue;

                // A: squares at block i, shifted to weak-power starts.
                std::vector<LabeledInterval> a_part;
                for (const LabeledInterval& li : squares[q]) {
                    Index lo = std::max<Index>(li.iv.lo - i * d, 0);
                    Index hi = std::min<Index>(li.iv.hi - i * d, m);
                    if (lo < hi) a_part.push_back({{lo, hi}, li.gen});
                }
                if (a_part.empty()) continue;

                // B: earlier equal partner for block i; C: any equal pair
                // starting at a block before i.
                std::vector<Interval> cut;
                for (Index q2 = 0; q2 < q; ++q2)
                    for (const Interval& iv : plain[q2])
                        cut.push_back({iv.lo - i * d, iv.hi - i * d});
                for (Index c = 0; c < i; ++c)
                    for (Index q2 = 0; q2 <= k - c - 2; ++q2)
                        for (const Interval& iv : plain[q2])
                            cut.push_back({iv.lo - c * d, iv.hi - c * d});
                for (Interval& iv : cut) {
                    iv.lo = std::clamp<Index>(iv.lo, 0, m);
                    iv.hi = std::clamp<Index>(iv.hi, iv.lo, m);
                }
                IntervalSet forbidden = union_family(cut, m);

                WeakPowKijEntry entry{i, j, d, {}};
                std::size_t fi = 0;
                for (const LabeledInterval& li : a_part) {
                    Index cur = li.iv.lo;
                    while (fi < forbidden.parts.size() && forbidden.parts[fi].hi <= cur) ++fi;
                    std::size_t fj = fi;
                    while (cur < li.iv.hi) {
                        if (fj >= forbidden.parts.size() || forbidden.parts[fj].lo >= li.iv.hi) {
                            entry.intervals.push_back({{cur, li.iv.hi}, li.gen});
                            break;
                        }
                        const Interval& f = forbidden.parts[fj];
                        if (f.lo > cur) entry.intervals.push_back({{cur, f.lo}, li.gen});
                        cur = std::max(cur, f.hi);
                        ++fj;
                    }
                }
                if (!entry.intervals.empty()) out.push_back(std::move(entry));
            }
        }
    }
    return out;
}

std::vector<std::vector<IntervalChain>> weakpow_chains(const Word& w, int k) {
    return weakpow_chains(w, k, LceToolkit(w));
}
std::vector<WeakPowKijEntry> weakpow_kij(const Word& w, int k) {
    return weakpow_kij(w, k, LceToolkit(w));
}
IntervalSet squares_rep(const Word& w, Index q, Index d) {
    return squares_rep(w, q, d, LceToolkit(w));
}

}  // namespace antipower
