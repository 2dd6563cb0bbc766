// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_SIM_SCENARIO_HPP
#define UNITY_SIM_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unity/params.hpp"

namespace unity::sim {

enum class Behavior : std::uint8_t { Honest, DoubleSpender, StakeGrinder, ColludingPair };

std::string_view to_string(Behavior b);
std::optional<Behavior> behavior_from_string(std::string_view name);

struct ActorSpec {
    std::string id;
    double hash_rate = 0.0;  // h_i
    std::uint64_t stake = 0; // v_i
    Behavior behavior = Behavior::Honest;
};

enum class ScenarioType : std::uint8_t {
    SteadyState,
    Fairness,
    DoubleSpend,
    StakeGrinding,
    Collusion,
    Convergence,
};

std::string_view to_string(ScenarioType t);
std::optional<ScenarioType> scenario_type_from_string(std::string_view name);

/// Declarative experiment description. Unused scenario-specific fields keep
/// their defaults; resolve() derives the genesis difficulties from the
/// actor totals when no explicit initial values are given.
struct ScenarioConfig {
    ScenarioType type = ScenarioType::SteadyState;
    ProtocolParams params;
    std::vector<ActorSpec> actors;
    std::optional<double> duration_days;
    std::optional<std::uint64_t> duration_blocks;
    std::uint64_t trials = 1;
    std::uint64_t rng_seed = 0;

    // scenario-specific
    double k = 1.0;                 // attacker hash power multiple
    double l = 1.0;                 // attacker stake multiple
    std::uint64_t horizon = 2000;   // double-spend race length, blocks per side
    double leak_fraction = 0.0;     // collusion head start as a fraction of the wait
    std::uint64_t x = 2;            // stake-grinding lockout, blocks
    std::size_t bins = 100;         // block-time histogram bins
    double bin_width = 1.0;         // seconds per bin
    std::optional<double> initial_d_w;
    std::optional<double> initial_d_s;
    bool analytic_sidechain_difficulty = false;

    double total_hash_rate() const;
    std::uint64_t total_stake() const;
    double duration_seconds() const;  // 0 when running by block count

    /// Fill params.genesis_d_* from the steady-state relation (or the
    /// explicit initial values) and check invariants. Throws
    /// std::invalid_argument on a bad configuration.
    void resolve();

    /// Parse + resolve. Throws std::invalid_argument with a descriptive
    /// message on schema violations (unknown keys, missing fields, bad
    /// types or ranges).
    static ScenarioConfig from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

/// Per-kind delta/difficulty traces and per-actor production counts from
/// one simulated chain.
struct ChainStats {
    struct BlockSample {
        std::uint64_t height = 0;
        double timestamp = 0.0;
        double delta = 0.0;
    };
    struct DifficultySample {
        std::uint64_t height = 0;
        double difficulty = 0.0;
    };
    struct ActorCounts {
        std::uint64_t work = 0;
        std::uint64_t stake = 0;
        std::uint64_t total() const { return work + stake; }
    };

    std::uint64_t total_blocks = 0;  // excluding genesis
    std::map<std::string, ActorCounts> by_actor;
    std::vector<BlockSample> work_blocks;
    std::vector<BlockSample> stake_blocks;
    std::vector<DifficultySample> work_difficulty;
    std::vector<DifficultySample> stake_difficulty;

    bool stalled = false;
    std::uint64_t stall_height = 0;
    std::string stall_detail;

    std::vector<double> work_deltas() const;
    std::vector<double> stake_deltas() const;
};

} // namespace unity::sim

#endif // UNITY_SIM_SCENARIO_HPP
