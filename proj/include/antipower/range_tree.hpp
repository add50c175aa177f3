#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "antipower/intervals.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Static segment tree over [0, m) holding a multiset of intervals.
// Per node: bi = how many stored intervals have this basic interval in their
// decomposition, val = uncovered weight within the node span, jump = lowest
// descendant with the same uncovered weight. Supports O(1) uncovered_count
// and output-sensitive report of uncovered positions.
//
// Leaves may carry weights (used when positions stand for runs of grid rows
// after coordinate renumbering); by default every leaf weighs 1.
class RangeTree {
  public:
    // `validate_removals` keeps an exact multiset of stored intervals so a
    // delete of a non-member fails hard. Internal sweeps that provably
    // remove what they inserted may turn it off.
    explicit RangeTree(bool validate_removals = true)
        : validate_(validate_removals) {}
    explicit RangeTree(Index m, bool validate_removals = true)
        : validate_(validate_removals) {
        reset(m);
    }

    void reset(Index m);
    void reset_weighted(std::span<const Count> weights);

    void insert(Interval iv);
    void remove(Interval iv);  // deleting a non-member is a hard error

    Count uncovered_count() const { return nodes_ ? val_[1] : 0; }
    // Uncovered positions of [0, m) in increasing order.
    std::vector<Index> report_uncovered() const;

    Index universe() const { return m_pub_; }
    // Nodes visited by the most recent insert/remove, for complexity checks.
    Index last_touched() const { return touched_; }

  private:
    void init(Index m_pub, std::span<const Count> weights);
    void update(Index node, Index node_lo, Index node_hi, Index lo, Index hi,
                std::int32_t delta);
    void pull(Index node);
    void report_rec(Index node, std::vector<Index>& out) const;

    Index m_pub_ = 0;   // requested universe
    Index m_ = 0;       // padded power-of-two universe
    Index nodes_ = 0;
    std::vector<std::int32_t> bi_;
    std::vector<Count> val_;
    std::vector<Index> jump_;
    std::vector<Count> weight_;
    std::unordered_map<std::uint64_t, std::int32_t> members_;
    bool validate_ = true;
    Index touched_ = 0;
};

}  // namespace antipower
