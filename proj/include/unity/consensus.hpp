// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_CONSENSUS_HPP
#define UNITY_CONSENSUS_HPP

#include <optional>
#include <string>

#include "unity/chain.hpp"
#include "unity/params.hpp"
#include "unity/stake.hpp"

namespace unity {

enum class ValidationError : std::uint8_t {
    UnknownParent,
    InterleaveViolation,
    BadDifficulty,
    BadProofOfWork,
    BadSeed,
    TooEarly,
    FutureBlock,
    StructuralError,
};

const char* to_string(ValidationError e);
std::optional<ValidationError> validation_error_from_string(std::string_view name);

struct ValidationFailure {
    ValidationError code;
    std::string detail;
};

/// Relative tolerance when comparing a block's declared difficulty with the
/// independently recomputed value.
inline constexpr double kDifficultyRelTol = 1e-9;

/// Seed the next PoS child of `parent_id` must sign: the seed of the
/// nearest PoS ancestor, or — when none exists yet — the genesis bootstrap
/// constant for the child's height parity (seed_0 for odd heights, seed_1
/// for even).
Hash256 prev_pos_seed(const ChainStore& store, const Hash256& parent_id,
                      std::uint64_t child_height, const ProtocolParams& params);

/// Full block validation. Rules, in reporting order:
///   (a) parent known                           -> UnknownParent
///   (b) kind differs from parent kind          -> InterleaveViolation
///   (a') height is parent height + 1           -> StructuralError
///   (c) difficulty matches next_difficulty     -> BadDifficulty
///   (d) Work: the PoW solution verifies        -> BadProofOfWork
///   (e) Stake: seed signs the grandparent seed -> BadSeed
///       and timestamp >= parent ts + wait time -> TooEarly
///       (stake snapshot taken at parent height)
///   (f) timestamp <= local clock + drift       -> FutureBlock
///   (g) timestamp >= parent timestamp          -> StructuralError
/// Returns nullopt when every rule holds.
std::optional<ValidationFailure> validate_block(const Block& block, const ChainStore& store,
                                                const StakeLedger& stake_view, double local_clock,
                                                const ProtocolParams& params);

struct InsertResult {
    bool accepted = false;
    bool reorg = false;
    Hash256 canonical_tip{};
    std::optional<ValidationFailure> error;  // set when rejected by validation
};

/// Validate, store, and re-run fork choice. Duplicate ids are an idempotent
/// no-op (accepted = false, no error). reorg is true iff the canonical tip
/// moved somewhere other than a direct extension of the previous tip.
InsertResult insert_block(ChainStore& store, Block block, const StakeLedger& stake_view,
                          double local_clock, const ProtocolParams& params);

} // namespace unity

#endif // UNITY_CONSENSUS_HPP
