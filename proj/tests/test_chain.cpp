// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <doctest.h>

#include "chain_testutil.hpp"

using namespace unity;
using namespace unity::testutil;

namespace {

Block raw_block(const Hash256& parent, std::uint64_t height, BlockKind kind, double ts, double d,
                const std::string& producer = "p", std::uint8_t tag = 0) {
    if (kind == BlockKind::Work)
        return make_work_block(parent, height, ts, d, producer, Bytes(kNonceSize, tag));
    Hash256 seed{};
    seed[0] = tag;
    return make_stake_block(parent, height, ts, d, producer, seed);
}

} // namespace

TEST_CASE("total difficulty accumulates per kind along the ancestry") {
    ChainStore store(make_genesis(5.0));
    CHECK(store.total_difficulty(store.genesis_id()) == TotalDifficulty{5.0, 0.0});

    const Block s = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 7.0);
    store.insert_unchecked(s);
    const Block w = raw_block(s.id, 2, BlockKind::Work, 2.0, 6.0);
    store.insert_unchecked(w);

    CHECK(store.total_difficulty(w.id) == TotalDifficulty{11.0, 7.0});
    CHECK(store.total_difficulty(s.id) == TotalDifficulty{5.0, 7.0});
    CHECK_THROWS_AS(store.total_difficulty(Hash256{}), std::out_of_range);
}

TEST_CASE("incremental totals equal a from-scratch resummation on a random chain") {
    SimRng rng(71);
    ChainStore store(make_genesis(3.0));
    Hash256 tip = store.genesis_id();
    double expected_work = 3.0, expected_stake = 0.0;
    BlockKind kind = BlockKind::Stake;
    for (int i = 1; i <= 50; ++i) {
        const double d = 1.0 + rng.uniform01() * 100.0;
        const Block b = raw_block(tip, static_cast<std::uint64_t>(i), kind, i, d);
        store.insert_unchecked(b);
        (kind == BlockKind::Work ? expected_work : expected_stake) += d;
        tip = b.id;
        kind = opposite(kind);

        // oracle: collect the ancestry, then re-add difficulty per kind in
        // root-to-tip order (the canonical accumulation order)
        std::vector<const Block*> path;
        const Block* cur = &store.block(tip);
        while (true) {
            path.push_back(cur);
            if (cur->id == store.genesis_id()) break;
            cur = &store.block(cur->parent_id);
        }
        TotalDifficulty oracle;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            (((*it)->kind == BlockKind::Work) ? oracle.work : oracle.stake) += (*it)->difficulty;
        }
        CHECK(store.total_difficulty(tip) == oracle);
    }
    CHECK(store.total_difficulty(tip) == TotalDifficulty{expected_work, expected_stake});
}

TEST_CASE("fork choice picks the strictly heavier tip") {
    ChainStore store(make_genesis(5.0));
    const Block a = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 95.0, "a", 1);
    const Block b = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 94.0, "b", 2);
    store.insert_unchecked(a);
    store.insert_unchecked(b);
    CHECK(fork_choice(store) == a.id);  // totals 100 vs 99
}

TEST_CASE("equal sums break toward more work, then the smaller id") {
    ChainStore store(make_genesis(10.0));
    // branch A: stake 40 then work 50 -> totals (60, 40)
    const Block a1 = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 40.0, "a", 1);
    const Block a2 = raw_block(a1.id, 2, BlockKind::Work, 2.0, 50.0, "a", 1);
    // branch B: stake 50 then work 40 -> totals (50, 50)
    const Block b1 = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 50.0, "b", 2);
    const Block b2 = raw_block(b1.id, 2, BlockKind::Work, 2.0, 40.0, "b", 2);
    store.insert_unchecked(a1);
    store.insert_unchecked(a2);
    store.insert_unchecked(b1);
    store.insert_unchecked(b2);
    CHECK(store.total_difficulty(a2.id).sum() == store.total_difficulty(b2.id).sum());
    CHECK(fork_choice(store) == a2.id);

    // identical totals too: the smaller id wins
    ChainStore tie(make_genesis(10.0));
    const Block t1 = raw_block(tie.genesis_id(), 1, BlockKind::Stake, 1.0, 40.0, "x", 1);
    const Block t2 = raw_block(tie.genesis_id(), 1, BlockKind::Stake, 1.0, 40.0, "y", 2);
    tie.insert_unchecked(t1);
    tie.insert_unchecked(t2);
    CHECK(fork_choice(tie) == std::min(t1.id, t2.id));
}

TEST_CASE("store rejects orphans and wrong heights") {
    ChainStore store(make_genesis(5.0));
    Hash256 missing{};
    missing[0] = 0xde;
    CHECK_THROWS_AS(store.insert_unchecked(raw_block(missing, 1, BlockKind::Stake, 1.0, 2.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        store.insert_unchecked(raw_block(store.genesis_id(), 2, BlockKind::Stake, 1.0, 2.0)),
        std::invalid_argument);
    // duplicates are a no-op
    const Block s = raw_block(store.genesis_id(), 1, BlockKind::Stake, 1.0, 2.0);
    CHECK(store.insert_unchecked(s));
    CHECK_FALSE(store.insert_unchecked(s));
    CHECK(store.size() == 2);
}

TEST_CASE("validated insertion extends the canonical tip without reorg") {
    const ProtocolParams params = dag_params();
    const StakeLedger ledger = dag_ledger();
    SimRng rng(73);
    RandomDag dag = build_random_dag(params, ledger, 30, rng);

    // canonical totals never decreased over the build
    // (insert_block already validated each step); extend the tip once more:
    const Block& tip = dag.store->block(dag.store->canonical_tip());
    const BlockKind kind = opposite(tip.kind);
    const double d = next_difficulty(*dag.store, tip.id, kind, params);
    Block child;
    if (kind == BlockKind::Stake) {
        const auto draw = best_staker_draw(std::vector<StakerSpec>{{"s-1", 60.0}, {"s-2", 40.0}},
                                           prev_pos_seed(*dag.store, tip.id, tip.height + 1, params),
                                           d);
        child = make_stake_block(tip.id, tip.height + 1,
                                 earliest_timestamp(tip.timestamp, draw->delta), d, draw->winner,
                                 draw->seed);
    } else {
        child = make_work_block(tip.id, tip.height + 1, tip.timestamp + 1.0, d, "miner",
                                mint_solution_nonce(pow_target(d), rng));
    }
    const auto res = insert_block(*dag.store, child, ledger, kFarFuture, params);
    CHECK(res.accepted);
    CHECK_FALSE(res.reorg);
    CHECK(res.canonical_tip == child.id);

    // duplicate insertion is an idempotent no-op
    const auto dup = insert_block(*dag.store, child, ledger, kFarFuture, params);
    CHECK_FALSE(dup.accepted);
    CHECK_FALSE(dup.error.has_value());
    CHECK(dup.canonical_tip == child.id);
}

TEST_CASE("a side branch overtaking the canonical total difficulty reorgs") {
    const ProtocolParams params = dag_params();
    const StakeLedger ledger = dag_ledger();
    SimRng rng(79);

    ChainStore store(make_genesis(params.genesis_d_w));
    const std::vector<StakerSpec> stakers{{"s-1", 60.0}, {"s-2", 40.0}};

    // two competing stake blocks at height 1 (both valid: nothing at stake)
    const Hash256 prev_seed = prev_pos_seed(store, store.genesis_id(), 1, params);
    const double d_s = next_difficulty(store, store.genesis_id(), BlockKind::Stake, params);
    std::vector<Block> siblings;
    for (const auto& s : stakers) {
        const Hash256 seed = next_seed(prev_seed, s.id);
        const double delta = wait_time(seed, s.stake, d_s);
        siblings.push_back(make_stake_block(store.genesis_id(), 1,
                                            earliest_timestamp(0.0, delta), d_s, s.id, seed));
    }
    REQUIRE(insert_block(store, siblings[0], ledger, kFarFuture, params).accepted);
    const auto second = insert_block(store, siblings[1], ledger, kFarFuture, params);
    REQUIRE(second.accepted);

    // whichever sibling now holds the canonical spot, a Work child on the
    // OTHER sibling makes that branch heavier and must reorg (resolving the
    // two-sibling stand-off the way miners do)
    const Hash256 canonical = store.canonical_tip();
    const Block& loser = siblings[0].id == canonical ? siblings[1] : siblings[0];
    const double d_w = next_difficulty(store, loser.id, BlockKind::Work, params);
    const Block child = make_work_block(loser.id, 2, loser.timestamp + 3.0, d_w, "miner",
                                        mint_solution_nonce(pow_target(d_w), rng));
    const auto res = insert_block(store, child, ledger, kFarFuture, params);
    CHECK(res.accepted);
    CHECK(res.reorg);
    CHECK(res.canonical_tip == child.id);
    CHECK(store.is_ancestor(loser.id, store.canonical_tip()));
}

TEST_CASE("fork choice agrees with the exhaustive path-sum oracle on random DAGs") {
    const ProtocolParams params = dag_params();
    const StakeLedger ledger = dag_ledger();
    SimRng rng(83);
    for (int round = 0; round < 50; ++round) {
        RandomDag dag = build_random_dag(params, ledger, 60, rng);
        CHECK(dag.store->canonical_tip() == exhaustive_best_tip(*dag.store));
        // insertion-order independence
        const Hash256 permuted = permuted_insertion_tip(params, ledger, dag.blocks, rng);
        CHECK(permuted == dag.store->canonical_tip());
    }
}

TEST_CASE("every canonical chain strictly alternates kinds") {
    const ProtocolParams params = dag_params();
    const StakeLedger ledger = dag_ledger();
    SimRng rng(89);
    RandomDag dag = build_random_dag(params, ledger, 80, rng);
    const auto chain = dag.store->canonical_chain();
    REQUIRE(!chain.empty());
    CHECK(chain.front()->id == dag.store->genesis_id());
    for (std::size_t i = 1; i < chain.size(); ++i) {
        CHECK(chain[i]->kind != chain[i - 1]->kind);
        CHECK(chain[i]->height == chain[i - 1]->height + 1);
        CHECK(chain[i]->timestamp >= chain[i - 1]->timestamp);
    }
}

TEST_CASE("canonical total difficulty never decreases across insertions") {
    const ProtocolParams params = dag_params();
    const StakeLedger ledger = dag_ledger();
    SimRng rng(91);
    const std::vector<StakerSpec> stakers{{"s-1", 60.0}, {"s-2", 40.0}};

    ChainStore store(make_genesis(params.genesis_d_w));
    std::vector<Hash256> ids{store.genesis_id()};
    double last_sum = store.total_difficulty(store.canonical_tip()).sum();
    for (int i = 0; i < 150; ++i) {
        const Hash256 parent_id = ids[rng.next_u64() % ids.size()];
        const Block& parent = store.block(parent_id);
        const BlockKind kind = opposite(parent.kind);
        const double d = next_difficulty(store, parent_id, kind, params);
        Block child;
        if (kind == BlockKind::Stake) {
            const auto draw = best_staker_draw(
                stakers, prev_pos_seed(store, parent_id, parent.height + 1, params), d);
            child = make_stake_block(parent_id, parent.height + 1,
                                     earliest_timestamp(parent.timestamp, draw->delta) +
                                         rng.uniform01() * 5.0,
                                     d, draw->winner, draw->seed);
        } else {
            child = make_work_block(parent_id, parent.height + 1,
                                    parent.timestamp + rng.exponential(0.1), d, "miner",
                                    mint_solution_nonce(pow_target(d), rng));
        }
        REQUIRE(insert_block(store, child, ledger, kFarFuture, params).accepted);
        ids.push_back(child.id);
        const double sum = store.total_difficulty(store.canonical_tip()).sum();
        CHECK(sum >= last_sum);
        last_sum = sum;
    }
}
