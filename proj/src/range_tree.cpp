#include "antipower/range_tree.hpp"

#include <bit>
#include <stdexcept>

namespace antipower {

namespace {
std::uint64_t interval_key(Interval iv) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(iv.lo)) << 32) |
           static_cast<std::uint32_t>(iv.hi);
}
}  // namespace

void RangeTree::reset(Index m) { init(m, {}); }

void RangeTree::reset_weighted(std::span<const Count> weights) {
    init(static_cast<Index>(weights.size()), weights);
}

void RangeTree::init(Index m_pub, std::span<const Count> weights) {
    if (m_pub < 1) throw std::invalid_argument("range tree universe must be positive");
    m_pub_ = m_pub;
    m_ = static_cast<Index>(std::bit_ceil(static_cast<std::uint32_t>(m_pub)));
    nodes_ = 2 * m_;
    bi_.assign(nodes_, 0);
    val_.assign(nodes_, 0);
    jump_.assign(nodes_, 0);
    weight_.assign(m_, 1);
    if (!weights.empty())
        for (Index i = 0; i < m_pub_; ++i) weight_[i] = weights[i];
    members_.clear();
    for (Index i = 0; i < m_; ++i) {
        val_[m_ + i] = weight_[i];
        jump_[m_ + i] = m_ + i;
    }
    for (Index node = m_ - 1; node >= 1; --node) pull(node);
    if (m_pub_ < m_) {  // mask the padding
        if (validate_) ++members_[interval_key({m_pub_, m_})];
        update(1, 0, m_, m_pub_, m_, +1);
    }
}

void RangeTree::pull(Index node) {
    if (bi_[node] > 0) {
        val_[node] = 0;
        jump_[node] = node;
        return;
    }
    if (node >= m_) {
        val_[node] = weight_[node - m_];
        jump_[node] = node;
        return;
    }
    Index l = 2 * node, r = 2 * node + 1;
    val_[node] = val_[l] + val_[r];
    if (val_[l] > 0 && val_[l] < val_[node])
        jump_[node] = node;
    else if (val_[r] == 0)
        jump_[node] = jump_[l];
    else
        jump_[node] = jump_[r];
}

void RangeTree::update(Index node, Index node_lo, Index node_hi, Index lo, Index hi,
                       std::int32_t delta) {
    ++touched_;
    if (lo <= node_lo && node_hi <= hi) {
        bi_[node] += delta;
        pull(node);
        return;
    }
    Index mid = (node_lo + node_hi) / 2;
    if (lo < mid) update(2 * node, node_lo, mid, lo, hi, delta);
    if (hi > mid) update(2 * node + 1, mid, node_hi, lo, hi, delta);
    pull(node);
}

void RangeTree::insert(Interval iv) {
    if (iv.lo < 0 || iv.hi > m_pub_ || iv.lo >= iv.hi)
        throw std::invalid_argument("insert outside universe");
    if (validate_) ++members_[interval_key(iv)];
    touched_ = 0;
    update(1, 0, m_, iv.lo, iv.hi, +1);
}

void RangeTree::remove(Interval iv) {
    if (validate_) {
        auto it = members_.find(interval_key(iv));
        if (it == members_.end() || it->second <= 0)
            throw std::logic_error("delete of an interval that is not stored");
        if (--it->second == 0) members_.erase(it);
    }
    touched_ = 0;
    update(1, 0, m_, iv.lo, iv.hi, -1);
}

void RangeTree::report_rec(Index node, std::vector<Index>& out) const {
    if (node >= m_) {
        out.push_back(node - m_);
        return;
    }
    report_rec(jump_[2 * node], out);
    report_rec(jump_[2 * node + 1], out);
}

std::vector<Index> RangeTree::report_uncovered() const {
    std::vector<Index> out;
    if (nodes_ == 0 || val_[1] == 0) return out;
    report_rec(jump_[1], out);
    return out;
}

}  // namespace antipower
