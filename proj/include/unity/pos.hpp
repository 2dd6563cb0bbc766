// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_POS_HPP
#define UNITY_POS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unity/hash.hpp"

namespace unity {

/// Deterministic, publicly verifiable seed derivation. The default is
/// hash-based — H("seed" || staker_id || prev_seed) — which gives the two
/// properties the protocol actually uses (one valid seed per staker and
/// prev seed, verifiable by anyone). A genuine unique-signature scheme can
/// be substituted through this interface.
struct SeedSigner {
    std::function<Hash256(std::string_view staker, const Hash256& prev_seed)> sign;
    std::function<bool(const Hash256& seed, std::string_view staker, const Hash256& prev_seed)>
        verify;

    static const SeedSigner& hash_based();
};

/// Seed of the next PoS block for `staker`, derived from the seed of the
/// nearest PoS ancestor (the new block's grandparent in a well-formed
/// chain, or a genesis constant during bootstrap).
Hash256 next_seed(const Hash256& prev_pos_seed, std::string_view staker);

bool verify_seed(const Hash256& seed, const Hash256& prev_pos_seed, std::string_view staker);

/// Wait time from an already-hashed seed value:
///   delta = d_s * ln(2^256 / value) / V.
/// An all-zero value is remapped to 1 so the logarithm stays finite. Over
/// uniform values, delta is Exp(V / d_s)-distributed. Throws
/// std::invalid_argument for V <= 0 or d_s <= 0.
double wait_time_from_hash(const Hash256& value, double stake, double d_s);

/// delta = d_s * ln(2^256 / H(seed)) / V with H = SHA-256.
double wait_time(const Hash256& seed, double stake, double d_s);

/// Minimal valid PoS timestamp: parent timestamp plus the wait time.
/// Throws std::invalid_argument for negative delta.
double earliest_timestamp(double parent_timestamp, double delta);

struct StakerSpec {
    std::string id;
    double stake = 0.0;  // V
};

struct StakerDraw {
    std::string winner;
    Hash256 seed{};
    double delta = 0.0;
};

/// Race every staker's wait time for the next PoS slot and return the
/// minimizer; ties go to the lexicographically smallest seed. Stakers with
/// zero stake never participate. Returns nullopt when nobody can stake —
/// the chain stalls.
std::optional<StakerDraw> best_staker_draw(std::span<const StakerSpec> stakers,
                                           const Hash256& prev_pos_seed, double d_s);

} // namespace unity

#endif // UNITY_POS_HPP
