// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_BLOCK_HPP
#define UNITY_BLOCK_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "unity/hash.hpp"

namespace unity {

enum class BlockKind : std::uint8_t { Work = 0, Stake = 1 };

inline BlockKind opposite(BlockKind k) {
    return k == BlockKind::Work ? BlockKind::Stake : BlockKind::Work;
}

std::string_view to_string(BlockKind kind);

/// Nonce is fixed at 32 bytes in the canonical encoding.
inline constexpr std::size_t kNonceSize = 32;

struct WorkProof {
    Bytes nonce;
};

struct StakeProof {
    Hash256 seed;
};

/// A block header of either kind. The proof variant makes a mixed-field
/// block (nonce on a stake block, seed on a work block) unrepresentable;
/// dump parsing rejects such inputs as structural errors.
struct Block {
    Hash256 parent_id{};
    BlockKind kind = BlockKind::Work;
    std::uint64_t height = 0;
    double timestamp = 0.0;
    double difficulty = 1.0;
    std::string producer_id;
    std::variant<WorkProof, StakeProof> proof;
    Hash256 id{};  // computed, never an input

    bool is_work() const { return kind == BlockKind::Work; }
    const Bytes& nonce() const { return std::get<WorkProof>(proof).nonce; }
    const Hash256& seed() const { return std::get<StakeProof>(proof).seed; }
};

/// Canonical encoding of everything but the proof payload. This is the
/// message the PoW puzzle commits to: H(header_bytes || nonce).
Bytes serialize_header(const Block& b);

/// Full canonical encoding (header plus proof payload).
Bytes serialize_block(const Block& b);

/// SHA-256 of the canonical encoding.
Hash256 block_id(const Block& b);

Block make_work_block(const Hash256& parent_id, std::uint64_t height, double timestamp,
                      double difficulty, std::string producer_id, Bytes nonce);

Block make_stake_block(const Hash256& parent_id, std::uint64_t height, double timestamp,
                       double difficulty, std::string producer_id, const Hash256& seed);

/// The single Work-kind genesis block: zero parent, height 0, timestamp 0,
/// all-zero nonce, producer "genesis".
Block make_genesis(double genesis_d_w);

} // namespace unity

#endif // UNITY_BLOCK_HPP
