#include "antipower/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "antipower/periodicity.hpp"
#include "antipower/range_tree.hpp"

namespace antipower {

std::vector<GridRect> chain_to_rects(const IntervalChain& chain, Index d, Index n, int k) {
    const Index m = n - static_cast<Index>(k) * d + 1;
    if (chain.step != d || chain.clip.lo != 0 || chain.clip.hi != m)
        throw std::invalid_argument("chain does not match the grid");
    const Index rows = (m + d - 1) / d;
    const Index last_cols = m - (rows - 1) * d;

    // Strip 0 is the base interval; the other count-1 strips sit one row up
    // each, in the same columns. The base footprint is a partial first row,
    // possibly full middle rows, and a partial tail row; each piece
    // replicated over `count` upward shifts gives one rectangle.
    const Index lo = chain.base.lo, len = chain.base.length();
    const Index r0 = lo / d, c0 = lo % d;
    const Index cnt = chain.count;
    struct Raw {
        Index row_lo, row_hi, col_lo, col_hi;  // rows inclusive
    };
    std::vector<Raw> raw;
    if (len > 0) {
        raw.push_back({r0 - cnt + 1, r0, c0, std::min<Index>(c0 + len, d)});
        Index full_lo = r0 + 1, full_hi = (lo + len) / d - 1;
        if (full_hi >= full_lo) raw.push_back({full_lo - cnt + 1, full_hi, 0, d});
        Index tail = (lo + len) % d;
        if (c0 + len > d && tail > 0)
            raw.push_back({(lo + len) / d - cnt + 1, (lo + len) / d, 0, tail});
    }

    std::vector<GridRect> out;
    for (const Raw& r : raw) {
        Index row_lo = std::max<Index>(r.row_lo, 0);
        Index row_hi = std::min<Index>(r.row_hi, rows - 1);
        if (row_lo > row_hi || r.col_lo >= r.col_hi) continue;
        if (row_hi == rows - 1 && r.col_hi > last_cols) {
            // The last grid row is shorter; split it off and clip it.
            if (row_hi - 1 >= row_lo) out.push_back({row_lo, row_hi, r.col_lo, r.col_hi});
            if (r.col_lo < last_cols) out.push_back({row_hi, row_hi + 1, r.col_lo, last_cols});
        } else {
            out.push_back({row_lo, row_hi + 1, r.col_lo, r.col_hi});
        }
    }
    return out;
}

namespace {

struct SweepEvent {
    Index strip;
    Index col;
    Index row_lo, row_hi;  // strip-local rows, half-open
    std::int32_t delta;
};

// Left-to-right sweep of one grid, strip by strip. Rows may be weighted
// (renumbered rows carry their original multiplicities). Returns the covered
// weight; `emit(row, col_lo, col_hi)`, when set, receives every maximal
// uncovered stretch per row between events.
Count strip_sweep(Index rows, std::span<const Count> weights,
                  std::span<const GridRect> rects, Index d, int k, RangeTree& tree,
                  const std::function<void(Index, Index, Index)>& emit) {
    if (rows == 0) return 0;
    const Index strips = (rows + k - 1) / k;

    // Width-d rectangles merge into one union of row intervals, preinserted.
    std::vector<Interval> vertical;
    std::vector<SweepEvent> events;
    for (const GridRect& r : rects) {
        if (r.row_lo >= r.row_hi || r.col_lo >= r.col_hi) continue;
        if (r.col_lo == 0 && r.col_hi == d) {
            vertical.push_back({r.row_lo, r.row_hi});
            continue;
        }
        Index s_first = r.row_lo / k, s_last = (r.row_hi - 1) / k;
        for (Index s = s_first; s <= s_last; ++s) {
            Index lo = std::max(r.row_lo, s * k) - s * k;
            Index hi = std::min(r.row_hi, (s + 1) * k) - s * k;
            events.push_back({s, r.col_lo, lo, hi, +1});
            events.push_back({s, r.col_hi, lo, hi, -1});
        }
    }
    std::sort(vertical.begin(), vertical.end());
    std::vector<Interval> vert_union;
    for (const Interval& iv : vertical) {
        if (!vert_union.empty() && iv.lo <= vert_union.back().hi)
            vert_union.back().hi = std::max(vert_union.back().hi, iv.hi);
        else
            vert_union.push_back(iv);
    }

    // Sort by (strip, col); grids are small enough that bucketing by column
    // only pays off for dense event sets.
    if (static_cast<Index>(events.size()) > d / 8) {
        std::vector<std::size_t> cnt(static_cast<std::size_t>(d) + 2, 0);
        for (const SweepEvent& e : events) ++cnt[e.col + 1];
        for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        std::vector<SweepEvent> tmp(events.size());
        for (const SweepEvent& e : events) tmp[cnt[e.col]++] = e;
        std::vector<std::size_t> scnt(static_cast<std::size_t>(strips) + 1, 0);
        for (const SweepEvent& e : tmp) ++scnt[e.strip + 1];
        for (std::size_t i = 1; i < scnt.size(); ++i) scnt[i] += scnt[i - 1];
        for (const SweepEvent& e : tmp) events[scnt[e.strip]++] = e;
    } else {
        std::stable_sort(events.begin(), events.end(),
                         [](const SweepEvent& a, const SweepEvent& b) {
                             return std::tie(a.strip, a.col) < std::tie(b.strip, b.col);
                         });
    }

    Count covered_total = 0;
    std::size_t ei = 0;
    std::size_t vi = 0;
    for (Index s = 0; s < strips; ++s) {
        const Index base = s * k;
        const Index height = std::min<Index>(k, rows - base);
        Count strip_weight = 0;
        if (weights.empty()) {
            tree.reset(height);
            strip_weight = height;
        } else {
            tree.reset_weighted(weights.subspan(base, height));
            for (Index r = 0; r < height; ++r) strip_weight += weights[base + r];
        }
        while (vi < vert_union.size() && vert_union[vi].hi <= base) ++vi;
        for (std::size_t v = vi; v < vert_union.size(); ++v) {
            const Interval& iv = vert_union[v];
            if (iv.lo >= base + height) break;
            tree.insert({std::max(iv.lo, base) - base, std::min(iv.hi, base + height) - base});
        }

        Index last_col = 0;
        auto account = [&](Index col) {
            if (col == last_col) return;
            Count uncovered = tree.uncovered_count();
            covered_total += (strip_weight - uncovered) * (col - last_col);
            if (emit && uncovered > 0)
                for (Index local : tree.report_uncovered()) emit(base + local, last_col, col);
            last_col = col;
        };
        while (ei < events.size() && events[ei].strip == s) {
            account(events[ei].col);
            if (events[ei].delta > 0)
                tree.insert({events[ei].row_lo, events[ei].row_hi});
            else
                tree.remove({events[ei].row_lo, events[ei].row_hi});
            ++ei;
        }
        account(d);
    }
    return covered_total;
}

void clip_to_grid(std::vector<GridRect>& rects, Index rows, Index last_cols) {
    std::vector<GridRect> out;
    for (const GridRect& r : rects) {
        Index row_lo = std::max<Index>(r.row_lo, 0);
        Index row_hi = std::min(r.row_hi, rows);
        if (row_lo >= row_hi || r.col_lo >= r.col_hi) continue;
        if (row_hi == rows && r.col_hi > last_cols) {
            if (row_hi - 1 > row_lo) out.push_back({row_lo, row_hi - 1, r.col_lo, r.col_hi});
            if (r.col_lo < last_cols) out.push_back({row_hi - 1, row_hi, r.col_lo, last_cols});
        } else {
            out.push_back({row_lo, row_hi, r.col_lo, r.col_hi});
        }
    }
    rects.swap(out);
}

}  // namespace

Count rect_union_area(std::span<const GridRect> rects, Index d, int k,
                      Index universe_cells) {
    if (d < 1 || k < 1 || universe_cells < 1) throw std::invalid_argument("bad grid");
    const Index rows = (universe_cells + d - 1) / d;
    const Index last_cols = universe_cells - (rows - 1) * d;
    std::vector<GridRect> clipped(rects.begin(), rects.end());
    clip_to_grid(clipped, rows, last_cols);
    RangeTree tree(false);
    return strip_sweep(rows, {}, clipped, d, k, tree, nullptr);
}

namespace {

// Per-base counting/reporting shared machinery: rectangles, row
// renumbering, strip sweep.
class GridPipeline {
  public:
    GridPipeline(const Word& w, int k) : n_(static_cast<Index>(w.size())), k_(k) {}

    // Processes base d given the chain representation of WeakPow_k(d).
    // Returns the antipower count; fills `fragments` when reporting.
    Count process(Index d, std::span<const IntervalChain> chains,
                  std::vector<Fragment>* fragments) {
        const Index m = n_ - static_cast<Index>(k_) * d + 1;
        const Index rows = (m + d - 1) / d;
        const Index last_cols = m - (rows - 1) * d;

        rects_.clear();
        for (const IntervalChain& chain : chains)
            for (const GridRect& r : chain_to_rects(chain, d, n_, k_)) rects_.push_back(r);

        // Renumber rows: boundaries are rect edges; runs between boundaries
        // collapse into one weighted row (bucket marks keep them sorted).
        marks_.assign(static_cast<std::size_t>(rows) + 1, 0);
        marks_[0] = marks_[rows] = 1;
        for (const GridRect& r : rects_) marks_[r.row_lo] = marks_[r.row_hi] = 1;
        bounds_.clear();
        for (Index x = 0; x <= rows; ++x)
            if (marks_[x]) bounds_.push_back(x);
        const Index comp_rows = static_cast<Index>(bounds_.size()) - 1;
        weights_.resize(comp_rows);
        for (Index i = 0; i < comp_rows; ++i) weights_[i] = bounds_[i + 1] - bounds_[i];
        auto comp_of = [&](Index row) {
            return static_cast<Index>(
                std::lower_bound(bounds_.begin(), bounds_.end(), row) - bounds_.begin());
        };
        for (GridRect& r : rects_) {
            r.row_lo = comp_of(r.row_lo);
            r.row_hi = comp_of(r.row_hi);
        }

        Count covered;
        if (fragments) {
            row_ranges_.assign(rows, {});
            auto emit = [&](Index comp_row, Index col_lo, Index col_hi) {
                for (Index r = bounds_[comp_row]; r < bounds_[comp_row + 1]; ++r) {
                    Index hi = r == rows - 1 ? std::min(col_hi, last_cols) : col_hi;
                    if (col_lo < hi) row_ranges_[r].emplace_back(col_lo, hi);
                }
            };
            covered = strip_sweep(comp_rows, weights_, rects_, d, k_, tree_, emit);
            for (Index r = 0; r < rows; ++r)
                for (auto [c1, c2] : row_ranges_[r])
                    for (Index c = c1; c < c2; ++c)
                        fragments->push_back({static_cast<Count>(r) * d + c,
                                              static_cast<Count>(k_) * d});
        } else {
            covered = strip_sweep(comp_rows, weights_, rects_, d, k_, tree_, nullptr);
        }
        return m - covered;
    }

  private:
    Index n_;
    int k_;
    RangeTree tree_{false};
    std::vector<GridRect> rects_;
    std::vector<std::uint8_t> marks_;
    std::vector<Index> bounds_;
    std::vector<Count> weights_;
    std::vector<std::vector<std::pair<Index, Index>>> row_ranges_;
};

int resolve_threads(int threads, Index work_items) {
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(threads, 1);
    return static_cast<int>(std::min<Index>(threads, std::max<Index>(work_items, 1)));
}

void check_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

CountResult count_antipowers(const Word& w, int k, int threads) {
    check_k(k);
    const Index n = static_cast<Index>(w.size());
    CountResult result;
    if (n < k) return result;
    const Index max_d = n / k;

    auto chains = weakpow_chains(w, k);
    std::vector<Count> per_d(static_cast<std::size_t>(max_d) + 1, 0);

    const int nthreads = resolve_threads(threads, max_d);
    auto worker = [&](int tid) {
        GridPipeline pipeline(w, k);
        for (Index d = 1 + tid; d <= max_d; d += nthreads)
            per_d[d] = pipeline.process(d, chains[d], nullptr);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    for (Index d = 1; d <= max_d; ++d) {
        result.per_d.emplace_back(d, per_d[d]);
        result.total += per_d[d];
    }
    return result;
}

CountResult count_antipowers_simple(const Word& w, int k) {
    check_k(k);
    const Index n = static_cast<Index>(w.size());
    CountResult result;
    if (n < k) return result;
    const Index max_d = n / k;

    LceToolkit tk(w);
    std::vector<GeneralizedRun> gruns = generalized_runs(w, tk);
    std::vector<std::vector<Interval>> families(static_cast<std::size_t>(max_d) + 1);

    auto add_chain = [&](const Generator& gen, Index q, Index d) {
        const Index m = n - static_cast<Index>(k) * d + 1;
        Interval base = squares_interval(gen, q, d);
        if (base.empty()) return;
        for (Index a = 0; a <= k - q - 2; ++a) {
            Index lo = std::max<Index>(base.lo - a * d, 0);
            Index hi = std::min<Index>(base.hi - a * d, m);
            if (lo < hi) families[d].push_back({lo, hi});
        }
    };

    for (Index q = 0; q <= k - 2; ++q) {
        if (q >= 1)
            for (const GappedRepeat& g : mgreps(w, {q + 1, 1}, tk)) {
                if (g.period % (q + 1) != 0) continue;
                Index d = g.period / (q + 1);
                if (d >= 1 && d <= max_d) add_chain(generator_of(g), q, d);
            }
        for (const GeneralizedRun& g : gruns) {
            if (g.period % (q + 1) != 0) continue;
            Index d = g.period / (q + 1);
            if (d >= 1 && d <= max_d) add_chain(generator_of(g), q, d);
        }
    }

    std::vector<IntervalSet> weak =
        union_families(std::span(families.data() + 1, families.size() - 1), n);
    for (Index d = 1; d <= max_d; ++d) {
        Count cnt = (n - static_cast<Count>(k) * d + 1) - weak[d - 1].size();
        result.per_d.emplace_back(d, cnt);
        result.total += cnt;
    }
    return result;
}

std::vector<Fragment> report_antipowers(const Word& w, int k, Index only_d, int threads) {
    check_k(k);
    const Index n = static_cast<Index>(w.size());
    std::vector<Fragment> out;
    if (n < k) return out;
    const Index max_d = n / k;
    if (only_d > max_d) return out;

    auto chains = weakpow_chains(w, k);
    const Index d_lo = only_d ? only_d : 1;
    const Index d_hi = only_d ? only_d : max_d;

    std::vector<std::vector<Fragment>> per_d(static_cast<std::size_t>(d_hi - d_lo) + 1);
    const int nthreads = resolve_threads(threads, d_hi - d_lo + 1);
    auto worker = [&](int tid) {
        GridPipeline pipeline(w, k);
        for (Index d = d_lo + tid; d <= d_hi; d += nthreads)
            pipeline.process(d, chains[d], &per_d[d - d_lo]);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    for (auto& frags : per_d) out.insert(out.end(), frags.begin(), frags.end());
    return out;
}

}  // namespace antipower
