#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "antipower/string_index.hpp"
#include "antipower/word.hpp"

namespace antipower {

struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

// Maximal repetition (i, j, p): w[i..j] has smallest period p, spans at least
// two periods and extends neither left nor right with period p. `end` is
// inclusive, following the (i, j, p) triple convention.
struct Run {
    Index start = 0;
    Index end = 0;
    Index period = 0;

    Index length() const { return end - start + 1; }
    double exponent() const { return static_cast<double>(length()) / period; }

    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run&, const Run&) = default;
};

// Like a run, but the period need not be the smallest one.
struct GeneralizedRun {
    Index start = 0;
    Index end = 0;
    Index period = 0;

    Index length() const { return end - start + 1; }

    friend bool operator==(const GeneralizedRun&, const GeneralizedRun&) = default;
    friend auto operator<=>(const GeneralizedRun&, const GeneralizedRun&) = default;
};

// Maximal gapped repeat u v u with nonempty gap: period |uv| < 2|u| is not
// required, but arm_len < period is (a gap of length zero would make the
// fragment a generalized run). alpha_bound is the parameter the repeat was
// enumerated for; period <= alpha_bound * arm_len holds.
struct GappedRepeat {
    Index start = 0;
    Index arm_len = 0;
    Index period = 0;
    Rational alpha_bound;

    Index length() const { return arm_len + period; }
    Index end() const { return start + length() - 1; }
};

std::vector<Run> compute_runs(const Word& w, const LceToolkit& tk);
std::vector<Run> compute_runs(const Word& w);

std::vector<GeneralizedRun> generalized_runs(const Word& w, const LceToolkit& tk);
// Restriction to periods >= min_period (for consumers that ignore the rest).
std::vector<GeneralizedRun> generalized_runs(const Word& w, const LceToolkit& tk,
                                             Index min_period);
std::vector<GeneralizedRun> generalized_runs(const Word& w);

std::vector<GappedRepeat> mgreps(const Word& w, Rational alpha, const LceToolkit& tk);
std::vector<GappedRepeat> mgreps(const Word& w, Rational alpha);

// nice_mgreps(w, k)[alpha], for alpha in [1, k): the maximal alpha-gapped
// repeats whose period p satisfies alpha | p and p >= 2*alpha^2.
std::vector<std::vector<GappedRepeat>> nice_mgreps(const Word& w, int k,
                                                   const LceToolkit& tk);
std::vector<std::vector<GappedRepeat>> nice_mgreps(const Word& w, int k);

// Maximal gapped repeats keyed by period, restricted to periods of the form
// alpha*d with alpha in [2, k) and d in [min_d, max_d]. These are the only
// repeats the base-d >= 2k-2 weak-power pipeline consumes; the arm >= d
// filter is applied by the consumer.
std::unordered_map<Index, std::vector<GappedRepeat>> mgreps_by_period(
    const Word& w, int k, Index min_d, Index max_d, const LceToolkit& tk);

}  // namespace antipower
