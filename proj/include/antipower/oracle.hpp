#pragma once

#include <array>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "antipower/compact_tree.hpp"
#include "antipower/periodicity.hpp"
#include "antipower/word.hpp"

namespace antipower::oracle {

// Definition-level reference implementations, kept free of the fast paths.
// Inputs beyond the size cap are rejected loudly.

inline constexpr Index kDefaultCap = 512;

std::vector<Fragment> brute_antipowers(const Word& w, int k, Index cap = kDefaultCap);

std::vector<Index> brute_weakpow(const Word& w, int k, Index d, Index cap = kDefaultCap);

std::vector<Index> brute_squares(const Word& w, Index q, Index d, Index cap = kDefaultCap);

// Weak powers keyed by their leftmost equal block pair: (i, j, d) -> starts.
std::map<std::tuple<Index, Index, Index>, std::vector<Index>> brute_weakpow_classified(
    const Word& w, int k, Index cap = kDefaultCap);

// Distinct k-antipower factors, by de-duplicating the fragment strings.
Count brute_distinct(const Word& w, int k, Index cap = kDefaultCap);

// Distinct factors with length a positive multiple of k (and at most
// max_len), via a substring set.
Count brute_distinct_divisible(const Word& w, Index k, Index max_len,
                               Index cap = kDefaultCap);

Count brute_distinct_squares(const Word& w, Index cap = kDefaultCap);
Count brute_distinct_antisquares(const Word& w, Index cap = kDefaultCap);

std::vector<Run> brute_runs(const Word& w, Index cap = kDefaultCap);
std::vector<GeneralizedRun> brute_generalized_runs(const Word& w, Index cap = kDefaultCap);
std::vector<GappedRepeat> brute_mgreps(const Word& w, Rational alpha,
                                       Index cap = kDefaultCap);

Index brute_minrot(const Word& w, Index start, Index len);

// Induced node pairs of one path pair, as (below, depth) keys per tree.
std::set<std::array<Index, 4>> brute_induced(const CompactTree& t,
                                             const CompactTree& t_rev,
                                             const PathPair& pair);
Count brute_ppp(const CompactTree& t, const CompactTree& t_rev,
                std::span<const PathPair> pairs);

}  // namespace antipower::oracle
