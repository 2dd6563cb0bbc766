// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/sim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unity/difficulty.hpp"
#include "unity/pos.hpp"
#include "unity/pow.hpp"

namespace unity::sim {

namespace {

struct Miner {
    std::string id;
    double hash_rate = 0.0;
    bool colluding = false;
};

} // namespace

ChainRun run_chain(const ProtocolParams& params, const std::vector<ActorSpec>& actors,
                   const StopRule& stop, SimRng& rng, double leak_fraction) {
    params.check();
    if (leak_fraction < 0.0 || leak_fraction > 1.0)
        throw std::invalid_argument("leak_fraction must be in [0, 1]");

    ChainRun run;
    run.store = std::make_unique<ChainStore>(make_genesis(params.genesis_d_w));
    ChainStore& store = *run.store;
    ChainStats& stats = run.stats;

    StakeLedger ledger;
    std::vector<StakerSpec> stakers;
    std::vector<Miner> miners;
    std::string colluder;
    for (const ActorSpec& a : actors) {
        // Genesis allocation: stakes vote from height 0, so the first PoS
        // block (validated against the stake at parent height 0) sees them.
        if (a.stake > 0) {
            ledger.lock_initial(a.id, a.stake);
            stakers.push_back({a.id, static_cast<double>(a.stake)});
        }
        if (a.behavior == Behavior::ColludingPair) {
            if (!colluder.empty())
                throw std::invalid_argument("at most one colluding_pair actor is supported");
            colluder = a.id;
        }
        if (a.hash_rate > 0.0)
            miners.push_back({a.id, a.hash_rate, a.behavior == Behavior::ColludingPair});
        stats.by_actor[a.id];  // make every actor visible in the report
    }

    if (stop.max_blocks) {
        const std::size_t cap = *stop.max_blocks / 2 + 1;
        stats.work_blocks.reserve(cap);
        stats.stake_blocks.reserve(cap);
        stats.work_difficulty.reserve(cap);
        stats.stake_difficulty.reserve(cap);
    }

    BlockKind kind = opposite(store.block(store.canonical_tip()).kind);
    while (true) {
        if (stop.max_blocks && stats.total_blocks >= *stop.max_blocks) break;

        const Block& parent = store.block(store.canonical_tip());
        const double d_next = next_difficulty(store, parent.id, kind, params);
        Block candidate;

        if (kind == BlockKind::Stake) {
            const Hash256 prev_seed = prev_pos_seed(store, parent.id, parent.height + 1, params);
            const auto draw = best_staker_draw(stakers, prev_seed, d_next);
            if (!draw) {
                stats.stalled = true;
                stats.stall_height = parent.height;
                stats.stall_detail = "no staker can extend height " +
                                     std::to_string(parent.height + 1);
                break;
            }
            const double ts = earliest_timestamp(parent.timestamp, draw->delta);
            candidate = make_stake_block(parent.id, parent.height + 1, ts, d_next, draw->winner,
                                         draw->seed);
        } else {
            if (miners.empty()) {
                stats.stalled = true;
                stats.stall_height = parent.height;
                stats.stall_detail = "no miner can extend height " +
                                     std::to_string(parent.height + 1);
                break;
            }
            // Colluding head start: the pair's mining arm receives the
            // staker's block leak_fraction * delta before it is eligible.
            double head_start = 0.0;
            if (leak_fraction > 0.0 && !colluder.empty() && parent.kind == BlockKind::Stake &&
                parent.producer_id == colluder && parent.id != store.genesis_id()) {
                const double parent_delta =
                    parent.timestamp - store.block(parent.parent_id).timestamp;
                head_start = leak_fraction * parent_delta;
            }
            const Miner* winner = nullptr;
            double best_completion = 0.0;
            for (const Miner& m : miners) {
                const double solve = sample_mining_time(m.hash_rate, d_next, rng);
                const double start = m.colluding ? parent.timestamp - head_start : parent.timestamp;
                // a block finished before the parent is eligible is held and
                // published the moment the parent is
                const double completion = std::max(parent.timestamp, start + solve);
                if (winner == nullptr || completion < best_completion) {
                    winner = &m;
                    best_completion = completion;
                }
            }
            const Bytes nonce = mint_solution_nonce(pow_target(d_next), rng);
            candidate = make_work_block(parent.id, parent.height + 1, best_completion, d_next,
                                        winner->id, nonce);
        }

        if (stop.max_time && candidate.timestamp > *stop.max_time) break;

        const double delta = candidate.timestamp - parent.timestamp;
        const auto result =
            insert_block(store, candidate, ledger, candidate.timestamp, params);
        if (!result.accepted) {
            throw std::logic_error(std::string("engine produced an invalid block: ") +
                                   (result.error ? to_string(result.error->code) : "duplicate") +
                                   (result.error ? " (" + result.error->detail + ")" : ""));
        }

        ++stats.total_blocks;
        auto& counts = stats.by_actor[candidate.producer_id];
        if (kind == BlockKind::Work) {
            ++counts.work;
            stats.work_blocks.push_back({candidate.height, candidate.timestamp, delta});
            stats.work_difficulty.push_back({candidate.height, d_next});
        } else {
            ++counts.stake;
            stats.stake_blocks.push_back({candidate.height, candidate.timestamp, delta});
            stats.stake_difficulty.push_back({candidate.height, d_next});
        }
        kind = opposite(kind);
    }

    run.tip_totals = store.total_difficulty(store.canonical_tip());
    return run;
}

ChainRun run_steady_state(const ScenarioConfig& config) {
    StopRule stop;
    if (config.duration_days) stop.max_time = config.duration_seconds();
    if (config.duration_blocks) stop.max_blocks = *config.duration_blocks;
    SimRng rng(SimRng::derive(config.rng_seed, 0));
    const double leak = config.type == ScenarioType::Collusion ? config.leak_fraction : 0.0;
    return run_chain(config.params, config.actors, stop, rng, leak);
}

std::vector<FairnessEntry> fairness_entries(const ScenarioConfig& config,
                                            const ChainStats& stats) {
    std::uint64_t work_total = 0, stake_total = 0;
    for (const auto& [id, counts] : stats.by_actor) {
        (void)id;
        work_total += counts.work;
        stake_total += counts.stake;
    }
    const std::uint64_t total = work_total + stake_total;

    std::vector<FairnessEntry> entries;
    for (const ActorSpec& a : config.actors) {
        FairnessEntry e;
        e.id = a.id;
        const auto it = stats.by_actor.find(a.id);
        if (it != stats.by_actor.end()) {
            e.work_blocks = it->second.work;
            e.stake_blocks = it->second.stake;
        }
        e.total_ratio = total ? static_cast<double>(e.work_blocks + e.stake_blocks) /
                                    static_cast<double>(total)
                              : 0.0;
        e.pow_ratio = work_total ? static_cast<double>(e.work_blocks) /
                                       static_cast<double>(work_total)
                                 : 0.0;
        e.pos_ratio = stake_total ? static_cast<double>(e.stake_blocks) /
                                        static_cast<double>(stake_total)
                                  : 0.0;
        entries.push_back(std::move(e));
    }
    return entries;
}

FairnessReport run_fairness(const ScenarioConfig& config) {
    FairnessReport report;
    report.run = run_steady_state(config);
    report.entries = fairness_entries(config, report.run.stats);
    return report;
}

CollusionReport run_collusion_headstart(const ScenarioConfig& config) {
    if (config.leak_fraction < 0.0 || config.leak_fraction > 1.0)
        throw std::invalid_argument("leak_fraction must be in [0, 1]");
    CollusionReport report;
    for (const ActorSpec& a : config.actors) {
        if (a.behavior == Behavior::ColludingPair) report.colluder_id = a.id;
    }
    report.run = run_steady_state(config);

    const ChainStats& stats = report.run.stats;
    std::uint64_t work_total = 0;
    for (const auto& [id, counts] : stats.by_actor) {
        (void)id;
        work_total += counts.work;
    }
    double colluder_hash = 0.0;
    for (const ActorSpec& a : config.actors)
        if (a.id == report.colluder_id) colluder_hash = a.hash_rate;
    const double total_hash = config.total_hash_rate();

    report.hash_share = total_hash > 0.0 ? colluder_hash / total_hash : 0.0;
    const auto it = stats.by_actor.find(report.colluder_id);
    const std::uint64_t colluder_work = it == stats.by_actor.end() ? 0 : it->second.work;
    report.work_share =
        work_total ? static_cast<double>(colluder_work) / static_cast<double>(work_total) : 0.0;
    report.excess_share = report.work_share - report.hash_share;
    return report;
}

} // namespace unity::sim
