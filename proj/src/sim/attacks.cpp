// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/sim/attacks.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "unity/sim/engine.hpp"

namespace unity::sim {

bool expected_double_spend_win(double k, double l, double d_w, double d_s) {
    if (k < 0.0 || l < 0.0) throw std::invalid_argument("k and l must be >= 0");
    if (!(d_w > 0.0) || !(d_s > 0.0)) throw std::invalid_argument("difficulties must be > 0");
    return k * d_w + l * d_s > d_w + d_s;
}

namespace {

struct TrialOutcome {
    bool win = false;
    double margin = 0.0;
};

TrialOutcome double_spend_trial(const ScenarioConfig& config, std::uint64_t trial) {
    // The honest network is every actor that is not the double spender; a
    // listed double_spender actor only marks the attack, its rates always
    // come from k and l.
    std::vector<ActorSpec> honest_actors;
    double honest_hash = 0.0;
    double honest_stake = 0.0;
    for (const ActorSpec& a : config.actors) {
        if (a.behavior == Behavior::DoubleSpender) continue;
        honest_actors.push_back(a);
        honest_hash += a.hash_rate;
        honest_stake += static_cast<double>(a.stake);
    }
    if (honest_actors.empty())
        throw std::invalid_argument("double_spend: no honest actors configured");

    // Every trial is a fork at a different chain position, so the seed
    // state at the fork point differs per trial. Both legs share it, the
    // way two branches of a real fork share their last PoS seeds; the
    // lineages then diverge through the producers' signatures.
    ProtocolParams fork_params = config.params;
    SimRng seed_rng(SimRng::derive(config.rng_seed, 3 * trial + 2));
    seed_rng.fill_bytes(fork_params.genesis_seed_0);
    seed_rng.fill_bytes(fork_params.genesis_seed_1);

    // Honest leg.
    SimRng honest_rng(SimRng::derive(config.rng_seed, 3 * trial));
    StopRule stop;
    stop.max_blocks = config.horizon;
    const ChainRun honest = run_chain(fork_params, honest_actors, stop, honest_rng);

    // Attacker leg: one actor holding k x the hash power and l x the stake,
    // racing alone from the same fork point.
    ProtocolParams attacker_params = fork_params;
    if (config.analytic_sidechain_difficulty) {
        attacker_params.genesis_d_w = std::max(1.0, config.k * config.params.genesis_d_w);
        attacker_params.genesis_d_s = std::max(1.0, config.l * config.params.genesis_d_s);
    }
    std::vector<ActorSpec> attacker_actors{
        {"attacker", config.k * honest_hash,
         static_cast<std::uint64_t>(std::llround(config.l * honest_stake)), Behavior::Honest}};
    SimRng attacker_rng(SimRng::derive(config.rng_seed, 3 * trial + 1));
    const ChainRun attacker = run_chain(attacker_params, attacker_actors, stop, attacker_rng);

    // Both legs carry the same genesis difficulty except under the analytic
    // shortcut; compare the growth beyond genesis so the shortcut does not
    // hand the attacker a free head start.
    const double genesis_h = config.params.genesis_d_w;
    const double genesis_a = attacker_params.genesis_d_w;
    const double td_honest = honest.tip_totals.sum() - genesis_h;
    const double td_attacker = attacker.tip_totals.sum() - genesis_a;

    TrialOutcome out;
    out.win = td_attacker > td_honest;
    out.margin = td_honest > 0.0 ? td_attacker / td_honest - 1.0 : 0.0;
    return out;
}

} // namespace

DoubleSpendResult run_double_spend(const ScenarioConfig& config, unsigned workers) {
    if (config.horizon == 0) throw std::invalid_argument("horizon must be > 0");
    const std::uint64_t trials = config.trials;
    std::vector<TrialOutcome> outcomes(trials);

    const unsigned n_workers =
        std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));
    if (n_workers == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) outcomes[t] = double_spend_trial(config, t);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t t = w; t < trials; t += n_workers)
                    outcomes[t] = double_spend_trial(config, t);
            });
        }
        for (auto& th : pool) th.join();
    }

    DoubleSpendResult result;
    result.trials = trials;
    result.margins.reserve(trials);
    for (const TrialOutcome& o : outcomes) {  // merge in trial order
        result.wins += o.win ? 1 : 0;
        result.margins.push_back(o.margin);
    }
    result.win_rate = trials ? static_cast<double>(result.wins) / static_cast<double>(trials) : 0.0;
    return result;
}

double stake_grinding_success(double p, std::uint64_t x) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    return std::pow(p, static_cast<double>(x));
}

GrindingResult run_stake_grinding(const ScenarioConfig& config) {
    GrindingResult result;
    result.x = config.x;
    result.windows = config.trials;

    const auto total = static_cast<double>(config.total_stake());
    if (!(total > 0.0)) throw std::invalid_argument("stake_grinding: no stake configured");
    double grinder_stake = 0.0;
    bool found = false;
    for (const ActorSpec& a : config.actors) {
        if (a.behavior == Behavior::StakeGrinder) {
            grinder_stake = static_cast<double>(a.stake);
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("stake_grinding: no stake_grinder actor");
    result.p = grinder_stake / total;
    result.closed_form = stake_grinding_success(result.p, result.x);
    result.lockout_closed_form = stake_grinding_success(result.p, result.x + 1);

    // Independent windows of x+1 height races each; a window where the first
    // x (or all x+1) are won counts toward the respective frequency.
    SimRng rng(SimRng::derive(config.rng_seed, 0));
    std::uint64_t wins_x = 0, wins_x1 = 0;
    for (std::uint64_t w = 0; w < result.windows; ++w) {
        std::uint64_t streak = 0;
        while (streak < result.x + 1 && rng.uniform01() <= result.p) ++streak;
        if (streak >= result.x) ++wins_x;
        if (streak >= result.x + 1) ++wins_x1;
    }
    result.empirical =
        result.windows ? static_cast<double>(wins_x) / static_cast<double>(result.windows) : 0.0;
    result.empirical_lockout =
        result.windows ? static_cast<double>(wins_x1) / static_cast<double>(result.windows) : 0.0;
    return result;
}

} // namespace unity::sim
