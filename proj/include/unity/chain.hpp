// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_CHAIN_HPP
#define UNITY_CHAIN_HPP

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unity/block.hpp"

namespace unity {

/// Cumulative Work and Stake difficulty along an ancestor path.
struct TotalDifficulty {
    double work = 0.0;
    double stake = 0.0;

    double sum() const { return work + stake; }
    bool operator==(const TotalDifficulty&) const = default;
};

/// Append-only DAG of blocks rooted at genesis. Keeps per-block cumulative
/// difficulty totals and the current canonical tip. Orphans are rejected:
/// a block's parent must already be present. Single-writer.
class ChainStore {
public:
    explicit ChainStore(Block genesis);

    bool contains(const Hash256& id) const { return blocks_.count(id) > 0; }
    const Block* find(const Hash256& id) const;
    /// Throws std::out_of_range for unknown ids.
    const Block& block(const Hash256& id) const;

    const Hash256& genesis_id() const { return genesis_id_; }
    const Hash256& canonical_tip() const { return canonical_tip_; }
    std::size_t size() const { return blocks_.size(); }

    /// Cumulative (work, stake) difficulty from genesis to the given block.
    /// Throws std::out_of_range for unknown ids.
    TotalDifficulty total_difficulty(const Hash256& id) const;

    /// Store a block without consensus validation (insert_block in
    /// consensus.hpp is the validated path). The parent must be present and
    /// the height must be parent height + 1; violations throw
    /// std::invalid_argument. Returns false for duplicate ids (no-op).
    bool insert_unchecked(Block b);

    /// Nearest ancestor of the given kind, starting at `from` itself.
    /// Returns nullptr if no such ancestor exists.
    const Block* nearest_ancestor_of_kind(const Hash256& from, BlockKind kind) const;

    /// Blocks without children.
    std::vector<Hash256> tips() const;

    /// Canonical chain from genesis to the canonical tip.
    std::vector<const Block*> canonical_chain() const;

    /// True iff `ancestor` lies on the ancestor path of `id` (inclusive).
    bool is_ancestor(const Hash256& ancestor, const Hash256& id) const;

    const std::vector<Hash256>& children_of(const Hash256& id) const;

private:
    friend Hash256 fork_choice(const ChainStore&);

    std::unordered_map<Hash256, Block, Hash256Hasher> blocks_;
    std::unordered_map<Hash256, std::vector<Hash256>, Hash256Hasher> children_;
    std::unordered_map<Hash256, TotalDifficulty, Hash256Hasher> totals_;
    std::unordered_set<Hash256, Hash256Hasher> tips_;
    Hash256 genesis_id_{};
    Hash256 canonical_tip_{};

    void recompute_canonical_tip();
};

/// The tip maximizing total difficulty td_w + td_s. Ties break toward the
/// greater work component, then the lexicographically smaller id, so every
/// node picks the same tip with no extra state.
Hash256 fork_choice(const ChainStore& store);

} // namespace unity

#endif // UNITY_CHAIN_HPP
