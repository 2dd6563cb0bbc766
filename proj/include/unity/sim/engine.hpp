// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_SIM_ENGINE_HPP
#define UNITY_SIM_ENGINE_HPP

#include <memory>

#include "unity/consensus.hpp"
#include "unity/rng.hpp"
#include "unity/sim/scenario.hpp"

namespace unity::sim {

/// How long one simulated chain runs. Whichever bound is set first stops
/// the leg; max_time drops the block that would cross the horizon.
struct StopRule {
    std::optional<double> max_time;
    std::optional<std::uint64_t> max_blocks;
};

struct ChainRun {
    std::unique_ptr<ChainStore> store;
    ChainStats stats;
    TotalDifficulty tip_totals;
};

/// Discrete-event loop. Heights strictly alternate kinds, so each height is
/// an exact race: stakers' wait times are pure functions of the seed
/// lineage, miners draw exponential solve times. Every produced block goes
/// through validated insert_block; a rejection means an engine bug and
/// throws std::logic_error. leak_fraction > 0 gives a ColludingPair actor's
/// mining arm a head start on PoS blocks produced by its staking arm.
ChainRun run_chain(const ProtocolParams& params, const std::vector<ActorSpec>& actors,
                   const StopRule& stop, SimRng& rng, double leak_fraction = 0.0);

/// Honest steady-state run: all actors race every height under the
/// configured (or auto-derived steady-state) initial difficulties.
ChainRun run_steady_state(const ScenarioConfig& config);

struct FairnessEntry {
    std::string id;
    std::uint64_t work_blocks = 0;
    std::uint64_t stake_blocks = 0;
    double total_ratio = 0.0;
    double pow_ratio = 0.0;
    double pos_ratio = 0.0;
};

struct FairnessReport {
    ChainRun run;
    std::vector<FairnessEntry> entries;
};

/// Steady-state run plus each actor's share of total / PoW-only / PoS-only
/// production.
FairnessReport run_fairness(const ScenarioConfig& config);

std::vector<FairnessEntry> fairness_entries(const ScenarioConfig& config, const ChainStats& stats);

struct CollusionReport {
    ChainRun run;
    std::string colluder_id;
    double hash_share = 0.0;   // fair share of Work blocks
    double work_share = 0.0;   // observed share
    double excess_share = 0.0; // observed - fair
};

/// Event loop with the leak enabled; reports the colluding miner's Work
/// share in excess of its hash-power share.
CollusionReport run_collusion_headstart(const ScenarioConfig& config);

} // namespace unity::sim

#endif // UNITY_SIM_ENGINE_HPP
