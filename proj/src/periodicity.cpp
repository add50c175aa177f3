#include "antipower/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antipower {

namespace {

void require_nonempty(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
}

Index isqrt(Index v) {
    Index r = static_cast<Index>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<std::int64_t>(r) * r > v) --r;
    while (static_cast<std::int64_t>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Maximal stretch of w[t] == w[t+p] around sample position x, as
// (backward, forward) extensions. Valid only when w[x] == w[x+p].
struct Stretch {
    Index back;
    Index fwd;
};

inline Stretch stretch_at(const LceToolkit& tk, Index x, Index p) {
    Index f = tk.extend_right(x, x + p);
    Index b = x > 0 ? tk.extend_left(x - 1, x + p - 1) : 0;
    return {b, f};
}

}  // namespace

std::vector<GeneralizedRun> generalized_runs(const Word& w, const LceToolkit& tk) {
    return generalized_runs(w, tk, 1);
}

std::vector<GeneralizedRun> generalized_runs(const Word& w, const LceToolkit& tk,
                                             Index min_period) {
    require_nonempty(w);
    const Index n = tk.n;
    std::vector<GeneralizedRun> out;
    for (Index p = std::max<Index>(min_period, 1); 2 * p <= n; ++p) {
        for (Index a = 0; a + p <= n; a += p) {
            // Pair (a, a+p); the fragment is emitted only from its leftmost
            // in-fragment anchor (back < p), so each shows up exactly once.
            bool fwd = a + p < n && w[a] == w[a + p];
            bool bwd = a > 0 && w[a - 1] == w[a + p - 1];
            if (!fwd && !bwd) continue;
            Index f = fwd ? tk.extend_right(a, a + p) : 0;
            Index b = bwd ? tk.extend_left(a - 1, a + p - 1) : 0;
            if (b < p && b + f >= p) out.push_back({a - b, a + p + f - 1, p});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Run> compute_runs(const Word& w, const LceToolkit& tk) {
    std::vector<GeneralizedRun> gruns = generalized_runs(w, tk);
    std::vector<Run> runs;
    for (std::size_t i = 0; i < gruns.size(); ++i) {
        // Sorted by (start, end, period): the first entry of each fragment
        // carries its smallest period.
        if (i > 0 && gruns[i].start == gruns[i - 1].start && gruns[i].end == gruns[i - 1].end)
            continue;
        runs.push_back({gruns[i].start, gruns[i].end, gruns[i].period});
    }
    return runs;
}

std::vector<GappedRepeat> mgreps(const Word& w, Rational alpha, const LceToolkit& tk) {
    require_nonempty(w);
    if (alpha.num < alpha.den || alpha.den <= 0)
        throw std::invalid_argument("alpha must be at least 1");
    const Index n = tk.n;
    std::vector<GappedRepeat> out;
    for (Index p = 1; p < n; ++p) {
        // Smallest admissible arm: p <= alpha * arm.
        Index min_arm = static_cast<Index>(
            (static_cast<std::int64_t>(p) * alpha.den + alpha.num - 1) / alpha.num);
        min_arm = std::max<Index>(min_arm, 1);
        if (min_arm >= p) continue;  // arm < p leaves no room
        for (Index x = 0; x + p < n; x += min_arm) {
            if (w[x] != w[x + p]) continue;
            auto [b, f] = stretch_at(tk, x, p);
            Index arm = b + f;
            if (b < min_arm && arm >= min_arm && arm < p)
                out.push_back({x - b, arm, p, alpha});
        }
    }
    return out;
}

std::vector<std::vector<GappedRepeat>> nice_mgreps(const Word& w, int k,
                                                   const LceToolkit& tk) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    std::vector<std::vector<GappedRepeat>> per_alpha(static_cast<std::size_t>(k));
    std::vector<GappedRepeat> all = mgreps(w, {k - 1, 1}, tk);

    // next[p][a] = smallest divisor of p in (a, k), rows built on demand.
    std::unordered_map<Index, std::vector<Index>> next_cache;
    const Index inf = static_cast<Index>(k);
    auto next_row = [&](Index p) -> const std::vector<Index>& {
        auto [it, fresh] = next_cache.try_emplace(p);
        if (fresh) {
            auto& row = it->second;
            row.assign(static_cast<std::size_t>(k), inf);
            for (Index a = static_cast<Index>(k) - 2; a >= 0; --a)
                row[a] = (p % (a + 1) == 0) ? a + 1 : row[a + 1];
        }
        return it->second;
    };

    for (const GappedRepeat& g : all) {
        Index p = g.period;
        Index alpha_lo = (p + g.arm_len - 1) / g.arm_len;
        Index alpha_hi = std::min<Index>(k - 1, isqrt(p / 2));
        if (alpha_lo > alpha_hi) continue;
        const std::vector<Index>& row = next_row(p);
        for (Index a = row[alpha_lo - 1]; a <= alpha_hi; a = row[a]) {
            GappedRepeat tagged = g;
            tagged.alpha_bound = {a, 1};
            per_alpha[a].push_back(tagged);
        }
    }
    return per_alpha;
}

std::unordered_map<Index, std::vector<GappedRepeat>> mgreps_by_period(
    const Word& w, int k, Index min_d, Index max_d, const LceToolkit& tk) {
    require_nonempty(w);
    const Index n = tk.n;
    std::unordered_map<Index, std::vector<GappedRepeat>> by_period;
    if (k < 3 || min_d > max_d) return by_period;

    // Smallest arm worth keeping per period (0 = period unusable): for
    // p = alpha*d the consumers want arms of at least d, and the smallest d
    // over the valid factorizations covers the rest.
    const Index p_limit = std::min<std::int64_t>(
        static_cast<std::int64_t>(k - 1) * max_d, n - 1);
    std::vector<Index> min_arm_of(static_cast<std::size_t>(p_limit) + 1, 0);
    for (Index d = min_d; d <= max_d; ++d)
        for (Index alpha = 2; alpha < k; ++alpha) {
            std::int64_t p64 = static_cast<std::int64_t>(alpha) * d;
            if (p64 > p_limit) break;
            Index p = static_cast<Index>(p64);
            if (min_arm_of[p] == 0) min_arm_of[p] = d;  // d ascending: first wins
        }

    // Arms are at least min_d long, so each repeat's left arm starts a pair
    // of equal length-min_d factors at distance p. Group positions by factor
    // class and enumerate in-class pairs; degenerate words with huge classes
    // fall back to arm-spaced sampling.
    const Index probe = min_d;
    Count pair_budget = 8 * static_cast<Count>(n) + 1024;
    std::vector<Index> cls(n - probe + 1);
    {
        const auto& sa = tk.forward.suffix_array();
        const auto& lcp = tk.forward.lcp();
        Index id = -1, chain_min = 0;
        bool have_prev = false;
        for (Index r = 0; r < n; ++r) {
            chain_min = r == 0 ? 0 : std::min(chain_min, lcp[r]);
            Index pos = sa[r];
            if (pos + probe > n) continue;
            if (!have_prev || chain_min < probe) ++id;
            cls[pos] = id;
            have_prev = true;
            chain_min = n;
        }
        std::vector<Index> count(static_cast<std::size_t>(id) + 2, 0);
        for (Index c : cls) ++count[c + 1];
        Count pairs = 0;
        for (Index c = 1; c <= id + 1; ++c) {
            pairs += static_cast<Count>(count[c]) * (count[c] - 1) / 2;
            count[c] += count[c - 1];
        }
        if (pairs <= pair_budget) {
            std::vector<Index> by_class(cls.size());
            {
                std::vector<Index> cursor(count.begin(), count.end() - 1);
                for (Index pos = 0; pos < static_cast<Index>(cls.size()); ++pos)
                    by_class[cursor[cls[pos]]++] = pos;
            }
            for (Index c = 0; c <= id; ++c) {
                for (Index i = count[c]; i < count[c + 1]; ++i)
                    for (Index j = i + 1; j < count[c + 1]; ++j) {
                        Index s = by_class[i], y = by_class[j];
                        Index p = y - s;
                        if (p > p_limit) break;  // distances grow with j
                        Index need = min_arm_of[p];
                        if (need == 0) continue;
                        if (s > 0 && w[s - 1] == w[y - 1]) continue;  // not a stretch start
                        Index arm = tk.extend_right(s, y);
                        if (arm >= need && arm < p)
                            by_period[p].push_back({s, arm, p, {k - 1, 1}});
                    }
            }
            return by_period;
        }
    }

    for (Index p = 1; p <= p_limit; ++p) {
        const Index min_arm = min_arm_of[p];
        if (min_arm == 0) continue;
        for (Index x = 0; x + p < n; x += min_arm) {
            if (w[x] != w[x + p]) continue;
            auto [b, f] = stretch_at(tk, x, p);
            Index arm = b + f;
            if (b < min_arm && arm >= min_arm && arm < p)
                by_period[p].push_back({x - b, arm, p, {k - 1, 1}});
        }
    }
    return by_period;
}

std::vector<Run> compute_runs(const Word& w) { return compute_runs(w, LceToolkit(w)); }
std::vector<GeneralizedRun> generalized_runs(const Word& w) {
    return generalized_runs(w, LceToolkit(w));
}
std::vector<GappedRepeat> mgreps(const Word& w, Rational alpha) {
    return mgreps(w, alpha, LceToolkit(w));
}
std::vector<std::vector<GappedRepeat>> nice_mgreps(const Word& w, int k) {
    return nice_mgreps(w, k, LceToolkit(w));
}

}  // namespace antipower
