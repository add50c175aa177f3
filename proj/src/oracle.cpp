#include "antipower/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace antipower::oracle {

namespace {

void check_cap(const Word& w, Index cap) {
    if (static_cast<Index>(w.size()) > cap)
        throw std::invalid_argument("oracle input exceeds its size cap");
}

bool blocks_equal(const Word& w, Index a, Index b, Index len) {
    for (Index t = 0; t < len; ++t)
        if (w[a + t] != w[b + t]) return false;
    return true;
}

bool is_weak_power(const Word& w, Index a, int k, Index d) {
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (blocks_equal(w, a + i * d, a + j * d, d)) return true;
    return false;
}

// Fragment with period p, maximal on both sides.
bool is_maximal_periodic(const Word& w, Index i, Index j, Index p) {
    const Index n = static_cast<Index>(w.size());
    if (j - i + 1 < 2 * p) return false;
    for (Index t = i; t + p <= j; ++t)
        if (w[t] != w[t + p]) return false;
    if (i > 0 && w[i - 1] == w[i - 1 + p]) return false;
    if (j + 1 < n && w[j + 1] == w[j + 1 - p]) return false;
    return true;
}

Index smallest_period(const Word& w, Index i, Index j) {
    for (Index p = 1; p <= j - i + 1; ++p) {
        bool ok = true;
        for (Index t = i; t + p <= j; ++t)
            if (w[t] != w[t + p]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return j - i + 1;
}

}  // namespace

std::vector<Fragment> brute_antipowers(const Word& w, int k, Index cap) {
    check_cap(w, cap);
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const Index n = static_cast<Index>(w.size());
    std::vector<Fragment> out;
    for (Index d = 1; d <= n / k; ++d)
        for (Index a = 0; a + k * d <= n; ++a)
            if (!is_weak_power(w, a, k, d)) out.push_back({a, static_cast<Count>(k) * d});
    return out;
}

std::vector<Index> brute_weakpow(const Word& w, int k, Index d, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::vector<Index> out;
    for (Index a = 0; a + k * d <= n; ++a)
        if (is_weak_power(w, a, k, d)) out.push_back(a);
    return out;
}

std::vector<Index> brute_squares(const Word& w, Index q, Index d, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::vector<Index> out;
    for (Index a = 0; a + (q + 2) * d <= n; ++a)
        if (blocks_equal(w, a, a + (q + 1) * d, d)) out.push_back(a);
    return out;
}

std::map<std::tuple<Index, Index, Index>, std::vector<Index>> brute_weakpow_classified(
    const Word& w, int k, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::map<std::tuple<Index, Index, Index>, std::vector<Index>> out;
    for (Index d = 1; d <= n / k; ++d)
        for (Index a = 0; a + k * d <= n; ++a) {
            for (Index i = 0; i < k; ++i) {
                for (Index j = i + 1; j < k; ++j)
                    if (blocks_equal(w, a + i * d, a + j * d, d)) {
                        out[{i, j, d}].push_back(a);
                        goto classified;
                    }
            }
            continue;
        classified:;
        }
    return out;
}

Count brute_distinct(const Word& w, int k, Index cap) {
    check_cap(w, cap);
    std::set<Word> factors;
    for (const Fragment& f : brute_antipowers(w, k, cap))
        factors.insert(Word(w.begin() + f.start, w.begin() + f.start + f.length));
    return static_cast<Count>(factors.size());
}

Count brute_distinct_divisible(const Word& w, Index k, Index max_len, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::unordered_set<std::string> factors;
    for (Index len = k; len <= std::min(n, max_len); len += k)
        for (Index a = 0; a + len <= n; ++a)
            factors.insert(std::string(reinterpret_cast<const char*>(w.data() + a),
                                       static_cast<std::size_t>(len) * sizeof(Symbol)));
    return static_cast<Count>(factors.size());
}

Count brute_distinct_squares(const Word& w, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::unordered_set<std::string> squares;
    for (Index len = 2; len <= n; len += 2)
        for (Index a = 0; a + len <= n; ++a)
            if (blocks_equal(w, a, a + len / 2, len / 2))
                squares.insert(std::string(reinterpret_cast<const char*>(w.data() + a),
                                           static_cast<std::size_t>(len) * sizeof(Symbol)));
    return static_cast<Count>(squares.size());
}

Count brute_distinct_antisquares(const Word& w, Index cap) {
    return brute_distinct_divisible(w, 2, static_cast<Index>(w.size()), cap) -
           brute_distinct_squares(w, cap);
}

std::vector<Run> brute_runs(const Word& w, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::vector<Run> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            Index p = smallest_period(w, i, j);
            if (2 * p <= j - i + 1 && is_maximal_periodic(w, i, j, p)) out.push_back({i, j, p});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralizedRun> brute_generalized_runs(const Word& w, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::vector<GeneralizedRun> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index p = 1; 2 * p <= j - i + 1; ++p)
                if (is_maximal_periodic(w, i, j, p)) out.push_back({i, j, p});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedRepeat> brute_mgreps(const Word& w, Rational alpha, Index cap) {
    check_cap(w, cap);
    const Index n = static_cast<Index>(w.size());
    std::vector<GappedRepeat> out;
    for (Index start = 0; start < n; ++start)
        for (Index p = 1; start + p < n; ++p)
            for (Index arm = 1; arm < p && start + p + arm <= n; ++arm) {
                if (static_cast<std::int64_t>(p) * alpha.den >
                    static_cast<std::int64_t>(arm) * alpha.num)
                    continue;
                if (!blocks_equal(w, start, start + p, arm)) continue;
                bool ext_left = start > 0 && w[start - 1] == w[start + p - 1];
                bool ext_right =
                    start + p + arm < n && w[start + arm] == w[start + p + arm];
                if (!ext_left && !ext_right) out.push_back({start, arm, p, alpha});
            }
    return out;
}

Index brute_minrot(const Word& w, Index start, Index len) {
    Word best, cur;
    Index best_i = 0;
    for (Index i = 0; i < len; ++i) {
        cur.assign(w.begin() + start + i, w.begin() + start + len);
        cur.insert(cur.end(), w.begin() + start, w.begin() + start + i);
        if (i == 0 || cur < best) {
            best = cur;
            best_i = i;
        }
    }
    return best_i;
}

namespace {

// Canonical ids of the nodes on the chain from `bottom` up to depth d_top,
// deepest first: (explicit node below or at the position, depth).
std::vector<std::array<Index, 2>> chain_nodes(const CompactTree& t, Index bottom,
                                              Index d_top) {
    std::vector<std::array<Index, 2>> out;
    Index v = bottom;
    Index d = t.depth[bottom];
    while (d >= d_top) {
        out.push_back({v, d});
        --d;
        while (v != 0 && t.depth[t.parent[v]] >= d) v = t.parent[v];
    }
    return out;
}

}  // namespace

std::set<std::array<Index, 4>> brute_induced(const CompactTree& t,
                                             const CompactTree& t_rev,
                                             const PathPair& pair) {
    auto down = chain_nodes(t, pair.bottom, t.depth[pair.top]);
    std::reverse(down.begin(), down.end());  // top first
    auto up = chain_nodes(t_rev, pair.bottom_rev, t_rev.depth[pair.top_rev]);
    if (down.size() != up.size()) throw std::logic_error("path pair lengths differ");
    std::set<std::array<Index, 4>> out;
    for (std::size_t i = 0; i < down.size(); ++i)
        out.insert({down[i][0], down[i][1], up[i][0], up[i][1]});
    return out;
}

Count brute_ppp(const CompactTree& t, const CompactTree& t_rev,
                std::span<const PathPair> pairs) {
    std::set<std::array<Index, 4>> all;
    for (const PathPair& p : pairs) {
        auto induced = brute_induced(t, t_rev, p);
        all.insert(induced.begin(), induced.end());
    }
    return static_cast<Count>(all.size());
}

}  // namespace antipower::oracle
