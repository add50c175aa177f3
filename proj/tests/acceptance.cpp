// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run via ctest or directly; intended to gate releases.

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "antipower/counting.hpp"
#include "antipower/distinct.hpp"
#include "antipower/oracle.hpp"
#include "antipower/periodicity.hpp"
#include "antipower/queries.hpp"
#include "antipower/range_tree.hpp"
#include "antipower/squares_weakpow.hpp"
#include "ppp_example.hpp"
#include "test_util.hpp"

using namespace antipower;
using namespace antipower::testutil;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    const char* name;
    bool ok = true;
    void check(bool cond) { ok = ok && cond; }
    ~Verdict() { std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name); }
};

Word random_word_sigma(std::mt19937_64& rng, Index n, int sigma) {
    std::uniform_int_distribution<Symbol> dist('a', 'a' + sigma - 1);
    Word w(n);
    for (Symbol& c : w) c = dist(rng);
    return w;
}

// Linearized binary de Bruijn-style word of length n (necklace
// concatenation, truncated).
Word de_bruijn_word(Index n) {
    int order = 1;
    while ((Index{1} << order) < n) ++order;
    std::vector<int> a(static_cast<std::size_t>(order) + 1, 0);
    Word seq;
    auto db = [&](auto&& self, int t, int p) -> void {
        if (t > order) {
            if (order % p == 0)
                for (int i = 1; i <= p; ++i) seq.push_back('a' + a[i]);
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        for (int c = a[t - p] + 1; c < 2; ++c) {
            a[t] = c;
            self(self, t + 1, t);
        }
    };
    db(db, 1, 1);
    for (int i = 0; i < order; ++i) seq.push_back(seq[i]);  // wrap a window
    seq.resize(n);
    return seq;
}

void check_combinatorial_bounds(Verdict& v, const Word& w, int k) {
    const double n = static_cast<double>(w.size());
    LceToolkit tk(w);
    auto runs = compute_runs(w, tk);
    v.check(static_cast<double>(runs.size()) <= n);
    double exponents = 0;
    for (const Run& r : runs) exponents += r.exponent();
    v.check(exponents <= 3 * n);
    v.check(static_cast<double>(generalized_runs(w, tk).size()) <= 1.5 * n);
    for (Index alpha = 1; alpha <= 3; ++alpha)
        v.check(static_cast<double>(mgreps(w, {alpha, 1}, tk).size()) <= 18.0 * alpha * n);
    auto nice = nice_mgreps(w, k, tk);
    for (Index alpha = 1; alpha < k; ++alpha)
        v.check(static_cast<double>(nice[alpha].size()) <= 54 * n);
}

}  // namespace

TEST_CASE("criterion 1: weak-power figure word") {
    Verdict v{"criterion 1: figure word counts, report and weak-power split"};
    Word w = word_from_string("cccababacbabbacb");

    count_antipowers(w, 4);  // warm up
    auto start = Clock::now();
    CountResult res = count_antipowers(w, 4);
    auto frags = report_antipowers(w, 4, 2);
    double elapsed = seconds_since(start);

    v.check(res.per_d.at(1) == std::pair<Index, Count>{2, 1});
    v.check(frags == std::vector<Fragment>{{5, 8}});

    // WeakPow_4(2): five positions from the period-2 run, three from the
    // 1.5-gapped repeat of period 6.
    auto chains = weakpow_chains(w, 4);
    std::set<Index> weak;
    for (const IntervalChain& c : chains[2])
        for (const Interval& iv : chain_materialize(c).parts)
            for (Index x = iv.lo; x < iv.hi; ++x) weak.insert(x);
    v.check(weak.size() == 8);

    LceToolkit tk(w);
    auto gruns = generalized_runs(w, tk);
    auto reps = mgreps(w, {3, 1}, tk);
    std::set<Index> run_part, rep_part;
    for (const GeneralizedRun& g : gruns)
        if (g.period == 2)
            for (const Interval& iv :
                 chain_materialize({squares_interval(generator_of(g), 0, 2), 2, 3, {0, 9}})
                     .parts)
                for (Index x = iv.lo; x < iv.hi; ++x) run_part.insert(x);
    for (const GappedRepeat& g : reps)
        if (g.period == 6 && g.arm_len >= 2)
            for (const Interval& iv :
                 chain_materialize({squares_interval(generator_of(g), 2, 2), 2, 1, {0, 9}})
                     .parts)
                for (Index x = iv.lo; x < iv.hi; ++x) rep_part.insert(x);
    v.check(run_part.size() == 5);
    v.check(rep_part.size() == 3);
    std::set<Index> both = run_part;
    both.insert(rep_part.begin(), rep_part.end());
    v.check(both == weak);

    v.check(elapsed < 1e-3);
    CHECK(v.ok);
}

TEST_CASE("criterion 2: range tree figure") {
    Verdict v{"criterion 2: range tree fixture"};
    auto start = Clock::now();
    RangeTree tree(8);
    tree.insert({2, 3});
    tree.insert({3, 5});
    tree.insert({4, 7});
    tree.insert({6, 7});
    v.check(tree.uncovered_count() == 3);
    v.check(tree.report_uncovered() == std::vector<Index>{0, 1, 7});
    v.check(seconds_since(start) < 1e-3);
    CHECK(v.ok);
}

TEST_CASE("criterion 3: path pairs reference instance") {
    Verdict v{"criterion 3: path pairs instance and intersection"};
    PppExample ex = build_ppp_example();
    v.check(solve_ppp(ex.t, ex.t_rev, ex.pairs) == 16);

    auto i1 = oracle::brute_induced(ex.t, ex.t_rev, ex.pairs[0]);
    auto i2 = oracle::brute_induced(ex.t, ex.t_rev, ex.pairs[1]);
    std::set<std::array<Index, 4>> inter;
    for (const auto& x : i1)
        if (i2.count(x)) inter.insert(x);
    auto key = [&](int lt, int lr) {
        return std::array<Index, 4>{ex.id_t[lt], ex.t.depth[ex.id_t[lt]], ex.id_rev[lr],
                                    ex.t_rev.depth[ex.id_rev[lr]]};
    };
    v.check(inter == std::set<std::array<Index, 4>>{key(3, 6), key(4, 5)});
    CHECK(v.ok);
}

TEST_CASE("criterion 4: exhaustive binary sweep") {
    Verdict v{"criterion 4: exhaustive oracle equivalence (binary, n <= 14)"};
    auto start = Clock::now();
    for (Index n = 1; n <= 14 && v.ok; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Word w(n);
            for (Index i = 0; i < n; ++i) w[i] = 'a' + ((mask >> i) & 1u);
            for (int k : {2, 3, 4}) {
                auto brute = oracle::brute_antipowers(w, k);
                CountResult fast = count_antipowers(w, k);
                CountResult simple = count_antipowers_simple(w, k);
                v.check(fast.total == static_cast<Count>(brute.size()));
                v.check(fast.per_d == simple.per_d);
                auto rep = report_antipowers(w, k);
                std::sort(rep.begin(), rep.end());
                std::sort(brute.begin(), brute.end());
                v.check(rep == brute);
            }
            if (!v.ok) break;
        }
    }
    double elapsed = seconds_since(start);
    v.check(elapsed < 60.0);
    std::printf("  criterion 4 sweep took %.1f s\n", elapsed);
    CHECK(v.ok);
}

TEST_CASE("criterion 5: randomized oracle equivalence") {
    Verdict v{"criterion 5: randomized counting/report/query/distinct"};
    std::mt19937_64 rng(20260810);
    for (int rep = 0; rep < 200; ++rep) {
        Index n = std::uniform_int_distribution<Index>(2, 300)(rng);
        int sigma = std::uniform_int_distribution<int>(2, 4)(rng);
        int k = std::uniform_int_distribution<int>(2, 6)(rng);
        Word w = random_word_sigma(rng, n, sigma);

        auto brute = oracle::brute_antipowers(w, k);
        CountResult fast = count_antipowers(w, k);
        CountResult simple = count_antipowers_simple(w, k);
        v.check(fast.total == static_cast<Count>(brute.size()));
        v.check(fast.per_d == simple.per_d);
        auto rep_frags = report_antipowers(w, k);
        std::sort(rep_frags.begin(), rep_frags.end());
        std::sort(brute.begin(), brute.end());
        v.check(rep_frags == brute);

        v.check(count_distinct_antipowers(w, k) == oracle::brute_distinct(w, k));

        Index sqrt_n = static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (Index r : {Index{1}, sqrt_n, n}) {
            QueryStructure qs(w, r);
            for (int q = 0; q < 1000; ++q) {
                Index kd = std::uniform_int_distribution<Index>(1, n)(rng);
                std::vector<Index> ks;
                for (Index kk = 2; kk <= kd && kk <= 8; ++kk)
                    if (kd % kk == 0) ks.push_back(kk);
                if (ks.empty()) continue;
                Index kk = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
                Index i = std::uniform_int_distribution<Index>(0, n - kd)(rng);
                Index j = i + kd - 1;
                Index b = kd / kk;
                bool expect = true;
                for (Index s = 0; s < kk && expect; ++s)
                    for (Index t = s + 1; t < kk && expect; ++t)
                        expect = !std::equal(w.begin() + i + s * b, w.begin() + i + (s + 1) * b,
                                             w.begin() + i + t * b);
                v.check(qs.query(i, j, static_cast<int>(kk)) == expect);
                v.check(qs.direct_check(i, j, static_cast<int>(kk)) == expect);
            }
        }
        if (!v.ok) break;
    }
    CHECK(v.ok);
}

TEST_CASE("criterion 6: combinatorial bounds") {
    Verdict v{"criterion 6: run/repeat structure bounds"};
    std::mt19937_64 rng(99);
    // Exhaustive small binary words plus assorted shapes.
    for (Index n = 1; n <= 10; ++n)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Word w(n);
            for (Index i = 0; i < n; ++i) w[i] = 'a' + ((mask >> i) & 1u);
            check_combinatorial_bounds(v, w, 4);
            if (!v.ok) break;
        }
    for (int rep = 0; rep < 60 && v.ok; ++rep) {
        Index n = std::uniform_int_distribution<Index>(2, 400)(rng);
        check_combinatorial_bounds(v, random_word_sigma(rng, n, rep % 2 ? 2 : 3), 5);
    }
    check_combinatorial_bounds(v, Word(300, 'a'), 4);
    check_combinatorial_bounds(v, de_bruijn_word(256), 4);
    CHECK(v.ok);
}

TEST_CASE("criterion 7: distinct antisquares") {
    Verdict v{"criterion 7: distinct antisquares vs oracle, quadratic trend"};
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 100; ++rep) {
        Index n = std::uniform_int_distribution<Index>(1, 1000)(rng);
        Word w = random_word_sigma(rng, n, std::uniform_int_distribution<int>(2, 4)(rng));
        v.check(count_distinct_antisquares(w) == oracle::brute_distinct_antisquares(w, 1024));
        if (!v.ok) break;
    }
    for (Index n : {Index{64}, Index{128}, Index{256}, Index{512}}) {
        Word w = de_bruijn_word(n);
        double ratio = static_cast<double>(count_distinct_antisquares(w)) /
                       (static_cast<double>(n) * static_cast<double>(n));
        v.check(ratio > 0.1);
    }
    CHECK(v.ok);
}

TEST_CASE("criterion 8: scaling smoke") {
    Verdict v{"criterion 8: near-linear scaling, simple-counter gap"};
    std::mt19937_64 rng(8);

    double previous = 0;
    for (Index n : {Index{250000}, Index{500000}, Index{1000000}}) {
        Word w = random_word_sigma(rng, n, 2);
        auto start = Clock::now();
        CountResult res = count_antipowers(w, 8);
        double elapsed = seconds_since(start);
        v.check(res.total > 0);
        if (n == 1000000) v.check(elapsed < 60.0);
        if (previous > 0) {
            double ratio = elapsed / previous;
            std::printf("  n=%d took %.2f s (x%.2f)\n", n, elapsed, ratio);
            v.check(ratio < 4.0);
        } else {
            std::printf("  n=%d took %.2f s\n", n, elapsed);
        }
        previous = elapsed;
    }

    Word w = random_word_sigma(rng, 100000, 2);
    auto t0 = Clock::now();
    CountResult fast = count_antipowers(w, 8);
    double fast_time = seconds_since(t0);
    auto t1 = Clock::now();
    CountResult simple = count_antipowers_simple(w, 8);
    double simple_time = seconds_since(t1);
    v.check(fast.per_d == simple.per_d);
    std::printf("  n=100000: fast %.3f s, simple %.3f s (x%.1f)\n", fast_time, simple_time,
                simple_time / fast_time);
    v.check(simple_time >= 5.0 * fast_time);
    CHECK(v.ok);
}

TEST_CASE("criterion 9: query structure trade-off") {
    Verdict v{"criterion 9: table size law and query agreement"};
    std::mt19937_64 rng(9);
    const Index n = 100000;
    Word w = random_word_sigma(rng, n, 3);

    Count cells100, cells1000;
    {
        QueryStructure qs(w, 100);
        cells100 = qs.table_cells();
        for (int q = 0; q < 1000; ++q) {
            Index kd = std::uniform_int_distribution<Index>(2, n)(rng);
            std::vector<Index> ks;
            for (Index kk = 2; kk <= kd && kk <= 2000; kk *= 2)
                if (kd % kk == 0) ks.push_back(kk);
            if (ks.empty()) continue;
            Index kk = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
            Index i = std::uniform_int_distribution<Index>(0, n - kd)(rng);
            v.check(qs.query(i, i + kd - 1, static_cast<int>(kk)) ==
                    qs.direct_check(i, i + kd - 1, static_cast<int>(kk)));
        }
    }
    {
        QueryStructure qs(w, 1000);
        cells1000 = qs.table_cells();
        for (int q = 0; q < 1000; ++q) {
            Index kd = std::uniform_int_distribution<Index>(2, n)(rng);
            std::vector<Index> ks;
            for (Index kk = 2; kk <= kd && kk <= 4000; kk *= 3)
                if (kd % kk == 0) ks.push_back(kk);
            if (ks.empty()) continue;
            Index kk = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
            Index i = std::uniform_int_distribution<Index>(0, n - kd)(rng);
            v.check(qs.query(i, i + kd - 1, static_cast<int>(kk)) ==
                    qs.direct_check(i, i + kd - 1, static_cast<int>(kk)));
        }
    }
    double ratio = static_cast<double>(cells100) / static_cast<double>(cells1000);
    std::printf("  cells r=100: %lld, r=1000: %lld (ratio %.2f)\n",
                static_cast<long long>(cells100), static_cast<long long>(cells1000), ratio);
    v.check(ratio >= 5.0);
    v.check(ratio <= 20.0);
    CHECK(v.ok);
}
