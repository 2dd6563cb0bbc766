// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_SIM_ATTACKS_HPP
#define UNITY_SIM_ATTACKS_HPP

#include "unity/sim/scenario.hpp"

namespace unity::sim {

/// Long-run double-spend winning condition: the attacker's side chain
/// out-accumulates the honest chain iff k*d_w + l*d_s > d_w + d_s, i.e.
/// for l < 1, k > 1 + (1-l) * d_s/d_w.
bool expected_double_spend_win(double k, double l, double d_w, double d_s);

struct DoubleSpendResult {
    double win_rate = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t wins = 0;
    std::vector<double> margins;  // per trial: td_attacker/td_honest - 1
};

/// Monte Carlo race: per trial, the honest network and an attacker with
/// (k*H, l*V) each grow an isolated chain from a common steady-state fork
/// point for `horizon` blocks; the attacker wins iff her total difficulty
/// ends strictly ahead. The side chain's difficulty converges to
/// (k*d_w, l*d_s) through the normal controller, or starts there when
/// analytic_sidechain_difficulty is set. An attacker missing either
/// resource stalls and loses. Trials run in parallel up to `workers`.
DoubleSpendResult run_double_spend(const ScenarioConfig& config, unsigned workers = 1);

/// Closed form for winning `x` consecutive PoS blocks with per-block win
/// probability p: p^x.
double stake_grinding_success(double p, std::uint64_t x);

struct GrindingResult {
    double p = 0.0;                  // grinder's stake share
    std::uint64_t x = 0;             // lockout length
    std::uint64_t windows = 0;
    double closed_form = 0.0;        // p^x
    double empirical = 0.0;          // frequency of x consecutive wins
    double lockout_closed_form = 0.0;// p^(x+1): wins needed to beat the lockout
    double empirical_lockout = 0.0;  // frequency of x+1 consecutive wins
};

/// Bernoulli model of the grinding attack (the per-height win probability
/// is the stake share): measures consecutive-win frequencies over
/// independent windows. Window count = scenario trials.
GrindingResult run_stake_grinding(const ScenarioConfig& config);

} // namespace unity::sim

#endif // UNITY_SIM_ATTACKS_HPP
