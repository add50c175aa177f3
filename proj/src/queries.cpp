#include "antipower/queries.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipower {

QueryStructure::QueryStructure(const Word& w, Index r)
    : w_(w), n_(static_cast<Index>(w.size())), r_(r) {
    if (n_ < 1) throw std::invalid_argument("word must be nonempty");
    if (r < 1 || r > n_) throw std::invalid_argument("r out of [1, n]");
    Index max_b = n_ / r_;
    if (max_b >= 1) tables_.emplace(w_, max_b, /*keep_identifiers=*/false);
    index_ = StringIndex(w_);
}

void QueryStructure::validate(Index i, Index j, int k) const {
    if (i < 0 || j >= n_ || i > j) throw std::invalid_argument("fragment out of range");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if ((j - i + 1) % k != 0) throw std::invalid_argument("k must divide the length");
}

// Equivalence classes of the length-b factors, by walking the suffix array
// and opening a new class whenever the LCP with the previous long-enough
// suffix drops below b. Built once per queried base and cached.
const std::vector<Index>& QueryStructure::factor_ids(Index b) const {
    std::scoped_lock lock(cache_mutex_);
    auto it = id_cache_.find(b);
    if (it != id_cache_.end()) return *it->second;

    auto ids = std::make_unique<std::vector<Index>>(n_ - b + 1, 0);
    const auto& sa = index_.suffix_array();
    const auto& lcp = index_.lcp();
    Index cls = -1;
    Index chain_min = 0;
    bool have_prev = false;
    for (Index rank = 0; rank < n_; ++rank) {
        chain_min = rank == 0 ? 0 : std::min(chain_min, lcp[rank]);
        Index pos = sa[rank];
        if (pos + b > n_) continue;
        if (!have_prev || chain_min < b) ++cls;
        (*ids)[pos] = cls;
        have_prev = true;
        chain_min = n_;
    }
    auto [ins, unused] = id_cache_.emplace(b, std::move(ids));
    (void)unused;
    return *ins->second;
}

bool QueryStructure::direct_check(Index i, Index j, int k) const {
    validate(i, j, k);
    const Index b = (j - i + 1) / k;
    const std::vector<Index>& ids = factor_ids(b);
    std::vector<Index> blocks(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) blocks[t] = ids[i + t * b];
    std::sort(blocks.begin(), blocks.end());
    return std::adjacent_find(blocks.begin(), blocks.end()) == blocks.end();
}

bool QueryStructure::query(Index i, Index j, int k) const {
    validate(i, j, k);
    if (k <= r_) return direct_check(i, j, k);
    const Index b = (j - i + 1) / k;
    // k > r forces b <= n/r, so the table exists.
    const Index g = i % b;
    const Index i2 = i / b;
    const Index j2 = (j + 1) / b - 2;
    return tables_->range_min(b, g, i2, j2) >= j2 + 2;
}

}  // namespace antipower
