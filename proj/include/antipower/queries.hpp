#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "antipower/block_ident.hpp"
#include "antipower/string_index.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Antipower-query structure with the space/time trade-off parameter r:
// next-equal-block tables with range minima for every base b <= n/r answer
// large-k queries in O(1); queries with k <= r fall back to a direct
// distinctness check of the k block identifiers.
class QueryStructure {
  public:
    QueryStructure(const Word& w, Index r);

    // Is w[i..j] (inclusive) a k-antipower? k must divide j-i+1.
    bool query(Index i, Index j, int k) const;

    // The fallback path, usable regardless of r.
    bool direct_check(Index i, Index j, int k) const;

    Index r() const { return r_; }
    Index max_base() const { return tables_ ? tables_->max_b() : 0; }
    // Total next-table cells; scales as n^2/r.
    Count table_cells() const { return tables_ ? tables_->cell_count() : 0; }

  private:
    void validate(Index i, Index j, int k) const;
    const std::vector<Index>& factor_ids(Index b) const;

    Word w_;
    Index n_ = 0;
    Index r_ = 0;
    std::optional<BlockTables> tables_;
    StringIndex index_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<Index, std::unique_ptr<std::vector<Index>>> id_cache_;
};

}  // namespace antipower
