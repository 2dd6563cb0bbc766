// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_PARAMS_HPP
#define UNITY_PARAMS_HPP

#include <cstdint>

#include "unity/hash.hpp"

namespace unity {

/// Bootstrap seed for the odd-height lineage, SHA-256("unity.genesis.seed.0").
Hash256 genesis_seed_0_default();
/// Bootstrap seed for the even-height lineage, SHA-256("unity.genesis.seed.1").
Hash256 genesis_seed_1_default();

/// All protocol tunables. The exponential rate lambda is always derived from
/// the target block time (lambda = 1/T); it is not an independent knob.
struct ProtocolParams {
    double target_block_time = 10.0;  // T, seconds
    double alpha = 0.025;             // difficulty learning rate
    std::uint64_t unlock_delay = 30;  // x, blocks until unlocked stake is liquid again
    double genesis_d_w = 5e6;
    double genesis_d_s = 5e6;
    Hash256 genesis_seed_0 = genesis_seed_0_default();
    Hash256 genesis_seed_1 = genesis_seed_1_default();
    double max_future_drift = 1.0;    // seconds
    PowHashKind pow_hash = PowHashKind::Sha256;

    double lambda() const { return 1.0 / target_block_time; }

    /// Throws std::invalid_argument unless T > 0, alpha > 0 and the genesis
    /// difficulties are >= 1.
    void check() const;
};

} // namespace unity

#endif // UNITY_PARAMS_HPP
