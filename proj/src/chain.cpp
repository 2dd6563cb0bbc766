// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/chain.hpp"

#include <stdexcept>

namespace unity {

ChainStore::ChainStore(Block genesis) {
    genesis_id_ = genesis.id;
    canonical_tip_ = genesis.id;
    TotalDifficulty td;
    if (genesis.kind == BlockKind::Work) {
        td.work = genesis.difficulty;
    } else {
        td.stake = genesis.difficulty;
    }
    totals_[genesis.id] = td;
    tips_.insert(genesis.id);
    blocks_.emplace(genesis.id, std::move(genesis));
}

const Block* ChainStore::find(const Hash256& id) const {
    auto it = blocks_.find(id);
    return it == blocks_.end() ? nullptr : &it->second;
}

const Block& ChainStore::block(const Hash256& id) const {
    auto it = blocks_.find(id);
    if (it == blocks_.end()) throw std::out_of_range("ChainStore: unknown block " + to_hex(id));
    return it->second;
}

TotalDifficulty ChainStore::total_difficulty(const Hash256& id) const {
    auto it = totals_.find(id);
    if (it == totals_.end()) throw std::out_of_range("ChainStore: unknown block " + to_hex(id));
    return it->second;
}

bool ChainStore::insert_unchecked(Block b) {
    if (blocks_.count(b.id)) return false;
    auto parent_it = blocks_.find(b.parent_id);
    if (parent_it == blocks_.end())
        throw std::invalid_argument("ChainStore: parent not present for " + to_hex(b.id));
    if (b.height != parent_it->second.height + 1)
        throw std::invalid_argument("ChainStore: height must be parent height + 1");

    TotalDifficulty td = totals_.at(b.parent_id);
    if (b.kind == BlockKind::Work) {
        td.work += b.difficulty;
    } else {
        td.stake += b.difficulty;
    }
    totals_[b.id] = td;
    children_[b.parent_id].push_back(b.id);
    tips_.erase(b.parent_id);
    tips_.insert(b.id);
    const Hash256 id = b.id;
    blocks_.emplace(id, std::move(b));
    recompute_canonical_tip();
    return true;
}

void ChainStore::recompute_canonical_tip() { canonical_tip_ = fork_choice(*this); }

const Block* ChainStore::nearest_ancestor_of_kind(const Hash256& from, BlockKind kind) const {
    const Block* cur = find(from);
    while (cur != nullptr) {
        if (cur->kind == kind) return cur;
        if (cur->id == genesis_id_) return nullptr;
        cur = find(cur->parent_id);
    }
    return nullptr;
}

std::vector<Hash256> ChainStore::tips() const {
    return {tips_.begin(), tips_.end()};
}

std::vector<const Block*> ChainStore::canonical_chain() const {
    std::vector<const Block*> chain;
    const Block* cur = &block(canonical_tip_);
    while (true) {
        chain.push_back(cur);
        if (cur->id == genesis_id_) break;
        cur = &block(cur->parent_id);
    }
    return {chain.rbegin(), chain.rend()};
}

bool ChainStore::is_ancestor(const Hash256& ancestor, const Hash256& id) const {
    const Block* cur = find(id);
    const Block* target = find(ancestor);
    if (cur == nullptr || target == nullptr) return false;
    while (true) {
        if (cur->id == ancestor) return true;
        if (cur->height <= target->height || cur->id == genesis_id_) return false;
        cur = &block(cur->parent_id);
    }
}

const std::vector<Hash256>& ChainStore::children_of(const Hash256& id) const {
    static const std::vector<Hash256> none;
    auto it = children_.find(id);
    return it == children_.end() ? none : it->second;
}

Hash256 fork_choice(const ChainStore& store) {
    const Hash256* best = nullptr;
    TotalDifficulty best_td;
    for (const Hash256& tip : store.tips_) {
        const TotalDifficulty td = store.totals_.at(tip);
        if (best == nullptr) {
            best = &tip;
            best_td = td;
            continue;
        }
        const bool better = td.sum() > best_td.sum() ||
                            (td.sum() == best_td.sum() &&
                             (td.work > best_td.work ||
                              (td.work == best_td.work && tip < *best)));
        if (better) {
            best = &tip;
            best_td = td;
        }
    }
    return *best;
}

} // namespace unity
