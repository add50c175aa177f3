#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "antipower/counting.hpp"
#include "antipower/oracle.hpp"
#include "test_util.hpp"

using namespace antipower;
using namespace antipower::testutil;

namespace {

std::vector<bool> rect_bitmap(std::span<const GridRect> rects, Index d, Index cells) {
    std::vector<bool> bits(cells, false);
    for (const GridRect& r : rects)
        for (Index row = r.row_lo; row < r.row_hi; ++row)
            for (Index col = r.col_lo; col < r.col_hi; ++col) {
                Index pos = row * d + col;
                if (pos >= 0 && pos < cells) bits[pos] = true;
            }
    return bits;
}

Count brute_count(const Word& w, int k) {
    return static_cast<Count>(oracle::brute_antipowers(w, k).size());
}

}  // namespace

TEST_CASE("chain decompositions of the grid figure") {
    const Index d = 5, n = 52;
    const int k = 5;
    const Interval clip{0, n - k * d + 1};
    // (a) no wrap: one 4x3 rectangle.
    auto a = chain_to_rects({{21, 24}, d, 4, clip}, d, n, k);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == GridRect{1, 5, 1, 4});
    // (c) strip longer than a row: includes a full-width middle rectangle.
    auto c = chain_to_rects({{13, 21}, d, 2, clip}, d, n, k);
    REQUIRE(c.size() == 3);
    bool has_full = false;
    for (const GridRect& r : c) has_full |= r.col_lo == 0 && r.col_hi == d;
    CHECK(has_full);
    // (d) clipped at the grid boundary.
    auto dd = chain_to_rects({{31, 34}, d, 4, clip}, d, n, k);
    std::vector<bool> bits = rect_bitmap(dd, d, clip.hi);
    std::vector<bool> expect(clip.hi, false);
    for (Index a2 = 0; a2 < 4; ++a2)
        for (Index x = 31; x < 34; ++x)
            if (x - a2 * d < clip.hi) expect[x - a2 * d] = true;
    CHECK(bits == expect);
}

TEST_CASE("chain decompositions cover exactly the chain cells") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10000; ++rep) {
        Index d = std::uniform_int_distribution<Index>(1, 12)(rng);
        int k = std::uniform_int_distribution<int>(2, 7)(rng);
        Index max_d_len = std::uniform_int_distribution<Index>(0, 30)(rng);
        Index n = k * d + std::uniform_int_distribution<Index>(0, 40)(rng);
        Index m = n - k * d + 1;
        Index lo = std::uniform_int_distribution<Index>(0, n)(rng);
        IntervalChain chain{{lo, std::min<Index>(lo + max_d_len, n)},
                            d,
                            std::uniform_int_distribution<Index>(1, k - 1)(rng),
                            {0, m}};
        auto rects = chain_to_rects(chain, d, n, k);
        for (const GridRect& r : rects) {
            bool ok = r.row_hi - r.row_lo <= k || r.col_hi - r.col_lo == d;
            CHECK(ok);
        }
        CHECK(rect_bitmap(rects, d, m) == to_bitmap(chain_materialize(chain)));
    }
}

TEST_CASE("rectangle union area matches a bitmap oracle") {
    CHECK(rect_union_area(std::vector<GridRect>{{0, 2, 1, 4}}, 8, 3, 64) == 6);
    std::vector<GridRect> two = {{0, 2, 0, 2}, {1, 3, 1, 3}};
    CHECK(rect_union_area(two, 8, 3, 64) == 7);

    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 40; ++rep) {
        Index d = 64;
        int k = std::uniform_int_distribution<int>(1, 8)(rng);
        std::vector<GridRect> rects;
        for (int t = 0; t < 200; ++t) {
            Index rlo = std::uniform_int_distribution<Index>(0, 63)(rng);
            Index rhi = std::uniform_int_distribution<Index>(rlo + 1, 64)(rng);
            Index clo = std::uniform_int_distribution<Index>(0, 63)(rng);
            Index chi = std::uniform_int_distribution<Index>(clo + 1, 64)(rng);
            if (rhi - rlo > k) {
                clo = 0;
                chi = 64;  // tall rectangles must span the full width
            }
            rects.push_back({rlo, rhi, clo, chi});
        }
        auto bits = rect_bitmap(rects, d, 64 * 64);
        Count expect = static_cast<Count>(std::count(bits.begin(), bits.end(), true));
        CHECK(rect_union_area(rects, d, k, 64 * 64) == expect);
    }
}

TEST_CASE("counting on the figure word") {
    Word w = word_from_string("cccababacbabbacb");
    CountResult fast = count_antipowers(w, 4);
    CountResult simple = count_antipowers_simple(w, 4);
    CHECK(fast.per_d ==
          std::vector<std::pair<Index, Count>>{{1, 0}, {2, 1}, {3, 3}, {4, 1}});
    CHECK(fast.total == 5);
    CHECK(simple.per_d == fast.per_d);
    CHECK(simple.total == fast.total);
    CHECK(brute_count(w, 4) == 5);
}

TEST_CASE("counting edge cases") {
    CHECK(count_antipowers(word_from_string("abcd"), 2).total == 4);
    CHECK(count_antipowers(word_from_string("aaaa"), 2).total == 0);
    CHECK(count_antipowers(word_from_string("ab"), 4).total == 0);
    CHECK(count_antipowers(word_from_string("ab"), 4).per_d.empty());
    CHECK_THROWS_AS(count_antipowers(word_from_string("ab"), 1), std::invalid_argument);
}

TEST_CASE("fast, simple and brute force agree on random words") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 60; ++rep) {
        Index n = std::uniform_int_distribution<Index>(2, 160)(rng);
        Word w = random_word(rng, n, rep % 3 == 0 ? 3 : 2);
        int k = std::uniform_int_distribution<int>(2, 6)(rng);
        CountResult fast = count_antipowers(w, k);
        CountResult simple = count_antipowers_simple(w, k);
        CHECK(fast.per_d == simple.per_d);
        CHECK(fast.total == brute_count(w, k));

        auto frags = report_antipowers(w, k);
        auto expect = oracle::brute_antipowers(w, k);
        std::sort(frags.begin(), frags.end());
        std::sort(expect.begin(), expect.end());
        CHECK(frags == expect);
        CHECK(static_cast<Count>(frags.size()) == fast.total);

        // Per-base complement identity.
        for (auto [d, cnt] : fast.per_d)
            CHECK(cnt + static_cast<Count>(oracle::brute_weakpow(w, k, d).size()) ==
                  n - static_cast<Count>(k) * d + 1);
    }
}

TEST_CASE("reporting on the figure word and ordering") {
    Word w = word_from_string("cccababacbabbacb");
    auto frags = report_antipowers(w, 4, 2);
    CHECK(frags == std::vector<Fragment>{{5, 8}});

    auto all = report_antipowers(w, 4);
    // Grouped by base, increasing start inside each group.
    for (std::size_t t = 1; t < all.size(); ++t) {
        CHECK(all[t - 1].length <= all[t].length);
        if (all[t - 1].length == all[t].length) CHECK(all[t - 1].start < all[t].start);
    }
    CHECK(report_antipowers(word_from_string("aaaa"), 2).empty());
}

TEST_CASE("threaded counting matches sequential") {
    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 10; ++rep) {
        Word w = random_word(rng, 300, 2);
        CountResult seq = count_antipowers(w, 5, 1);
        CountResult par = count_antipowers(w, 5, 4);
        CHECK(seq.per_d == par.per_d);
        auto rs = report_antipowers(w, 5, 0, 1);
        auto rp = report_antipowers(w, 5, 0, 4);
        CHECK(rs == rp);
    }
}

TEST_CASE("appending a fresh letter never decreases the count") {
    std::mt19937_64 rng(45);
    for (int rep = 0; rep < 40; ++rep) {
        Word w = random_word(rng, std::uniform_int_distribution<Index>(2, 80)(rng), 2);
        int k = std::uniform_int_distribution<int>(2, 4)(rng);
        Count before = count_antipowers(w, k).total;
        Word w2 = w;
        w2.push_back('z');
        CHECK(count_antipowers(w2, k).total >= before);
    }
}

TEST_CASE("exhaustive ternary sweep") {
    for (Index n = 1; n <= 8; ++n) {
        Index total = 1;
        for (Index i = 0; i < n; ++i) total *= 3;
        for (Index word_id = 0; word_id < total; ++word_id) {
            Word w(n);
            Index x = word_id;
            for (Index i = 0; i < n; ++i) {
                w[i] = 'a' + x % 3;
                x /= 3;
            }
            for (int k : {2, 3}) {
                CountResult fast = count_antipowers(w, k);
                CHECK(fast.total == brute_count(w, k));
                CHECK(fast.per_d == count_antipowers_simple(w, k).per_d);
            }
        }
    }
}

namespace {

Word fibonacci_word(Index target) {
    Word a = word_from_string("a"), b = word_from_string("ab");
    while (static_cast<Index>(b.size()) < target) {
        Word next = b;
        next.insert(next.end(), a.begin(), a.end());
        a = std::move(b);
        b = std::move(next);
    }
    b.resize(target);
    return b;
}

Word thue_morse_word(Index target) {
    Word w;
    for (Index i = 0; i < target; ++i)
        w.push_back('a' + (std::popcount(static_cast<unsigned>(i)) & 1));
    return w;
}

}  // namespace

TEST_CASE("structured words: periodicity-heavy inputs match brute force") {
    std::vector<Word> words;
    words.push_back(fibonacci_word(233));
    words.push_back(thue_morse_word(256));
    words.push_back(Word(200, 'a'));
    {
        Word unit = word_from_string("abaab");
        Word v;
        while (v.size() < 250) v.insert(v.end(), unit.begin(), unit.end());
        words.push_back(std::move(v));
    }
    {
        Word v = fibonacci_word(120);
        Word rev(v.rbegin(), v.rend());
        v.insert(v.end(), rev.begin(), rev.end());  // palindromic doubling
        words.push_back(std::move(v));
    }
    for (const Word& w : words)
        for (int k : {2, 3, 5, 8}) {
            auto brute = oracle::brute_antipowers(w, k);
            CountResult fast = count_antipowers(w, k);
            CHECK(fast.total == static_cast<Count>(brute.size()));
            CHECK(fast.per_d == count_antipowers_simple(w, k).per_d);
            auto rep = report_antipowers(w, k);
            std::sort(rep.begin(), rep.end());
            std::sort(brute.begin(), brute.end());
            CHECK(rep == brute);
        }
}
