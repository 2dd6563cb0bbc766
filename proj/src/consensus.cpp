// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/consensus.hpp"

#include <cmath>

#include "unity/difficulty.hpp"
#include "unity/pos.hpp"
#include "unity/pow.hpp"

namespace unity {

const char* to_string(ValidationError e) {
    switch (e) {
        case ValidationError::UnknownParent: return "UnknownParent";
        case ValidationError::InterleaveViolation: return "InterleaveViolation";
        case ValidationError::BadDifficulty: return "BadDifficulty";
        case ValidationError::BadProofOfWork: return "BadProofOfWork";
        case ValidationError::BadSeed: return "BadSeed";
        case ValidationError::TooEarly: return "TooEarly";
        case ValidationError::FutureBlock: return "FutureBlock";
        case ValidationError::StructuralError: return "StructuralError";
    }
    return "UnknownError";
}

std::optional<ValidationError> validation_error_from_string(std::string_view name) {
    for (const auto e :
         {ValidationError::UnknownParent, ValidationError::InterleaveViolation,
          ValidationError::BadDifficulty, ValidationError::BadProofOfWork, ValidationError::BadSeed,
          ValidationError::TooEarly, ValidationError::FutureBlock,
          ValidationError::StructuralError}) {
        if (name == to_string(e)) return e;
    }
    return std::nullopt;
}

Hash256 prev_pos_seed(const ChainStore& store, const Hash256& parent_id,
                      std::uint64_t child_height, const ProtocolParams& params) {
    const Block* anchor = store.nearest_ancestor_of_kind(parent_id, BlockKind::Stake);
    if (anchor != nullptr) return anchor->seed();
    return (child_height % 2 == 1) ? params.genesis_seed_0 : params.genesis_seed_1;
}

std::optional<ValidationFailure> validate_block(const Block& block, const ChainStore& store,
                                                const StakeLedger& stake_view, double local_clock,
                                                const ProtocolParams& params) {
    using VE = ValidationError;
    const auto fail = [](VE code, std::string detail) {
        return ValidationFailure{code, std::move(detail)};
    };

    // (a) parent known
    const Block* parent = store.find(block.parent_id);
    if (parent == nullptr) return fail(VE::UnknownParent, "parent " + to_hex(block.parent_id));

    // (b) interleaving
    if (block.kind == parent->kind)
        return fail(VE::InterleaveViolation,
                    std::string(to_string(block.kind)) + " on " + std::string(to_string(parent->kind)));

    if (block.height != parent->height + 1)
        return fail(VE::StructuralError, "height " + std::to_string(block.height) +
                                             " does not follow parent height " +
                                             std::to_string(parent->height));
    if (!(block.difficulty > 0.0)) return fail(VE::StructuralError, "non-positive difficulty");

    // (c) difficulty re-derivation
    const double expected = next_difficulty(store, block.parent_id, block.kind, params);
    if (std::abs(block.difficulty - expected) > kDifficultyRelTol * expected)
        return fail(VE::BadDifficulty, "declared " + std::to_string(block.difficulty) +
                                           ", expected " + std::to_string(expected));

    if (block.is_work()) {
        // (d) proof of work
        if (!verify_pow(serialize_header(block), block.nonce(), block.difficulty,
                        pow_hash_function(params.pow_hash)))
            return fail(VE::BadProofOfWork, "digest above target");
    } else {
        // (e) seed lineage, then eligibility time
        const Hash256 prev_seed = prev_pos_seed(store, block.parent_id, block.height, params);
        if (!verify_seed(block.seed(), prev_seed, block.producer_id))
            return fail(VE::BadSeed, "seed does not sign the previous PoS seed for " +
                                         block.producer_id);
        const double stake =
            static_cast<double>(stake_view.effective_stake(block.producer_id, parent->height));
        if (!(stake > 0.0))
            return fail(VE::BadSeed, "producer " + block.producer_id + " has no effective stake");
        const double delta = wait_time(block.seed(), stake, block.difficulty);
        const double earliest = earliest_timestamp(parent->timestamp, delta);
        if (block.timestamp < earliest)
            return fail(VE::TooEarly, "timestamp " + std::to_string(block.timestamp) +
                                          " before eligibility " + std::to_string(earliest));
    }

    // (f) future bound
    if (block.timestamp > local_clock + params.max_future_drift)
        return fail(VE::FutureBlock, "timestamp " + std::to_string(block.timestamp) +
                                         " beyond clock " + std::to_string(local_clock));

    // (g) monotone timestamps
    if (block.timestamp < parent->timestamp)
        return fail(VE::StructuralError, "timestamp precedes parent");

    return std::nullopt;
}

InsertResult insert_block(ChainStore& store, Block block, const StakeLedger& stake_view,
                          double local_clock, const ProtocolParams& params) {
    InsertResult result;
    result.canonical_tip = store.canonical_tip();

    if (store.contains(block.id)) return result;  // idempotent no-op

    result.error = validate_block(block, store, stake_view, local_clock, params);
    if (result.error) return result;

    const Hash256 previous_tip = store.canonical_tip();
    const Hash256 id = block.id;
    const Hash256 parent_id = block.parent_id;
    store.insert_unchecked(std::move(block));

    result.accepted = true;
    result.canonical_tip = store.canonical_tip();
    result.reorg = result.canonical_tip == id && parent_id != previous_tip;
    return result;
}

} // namespace unity
