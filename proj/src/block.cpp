// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/block.hpp"

#include <stdexcept>

#include "unity/params.hpp"
#include "unity/serialize.hpp"

namespace unity {

std::string_view to_string(BlockKind kind) {
    return kind == BlockKind::Work ? "work" : "stake";
}

Bytes serialize_header(const Block& b) {
    ByteWriter w;
    w.raw(ByteSpan{b.parent_id.data(), b.parent_id.size()});
    w.u8(static_cast<std::uint8_t>(b.kind));
    w.u64be(b.height);
    w.f64be(b.timestamp);
    w.f64be(b.difficulty);
    w.sized(as_bytes(b.producer_id));
    return std::move(w.out);
}

Bytes serialize_block(const Block& b) {
    ByteWriter w;
    w.out = serialize_header(b);
    if (b.is_work()) {
        w.sized(b.nonce());
    } else {
        const Hash256& s = b.seed();
        w.raw(ByteSpan{s.data(), s.size()});
    }
    return std::move(w.out);
}

Hash256 block_id(const Block& b) { return sha256(serialize_block(b)); }

Block make_work_block(const Hash256& parent_id, std::uint64_t height, double timestamp,
                      double difficulty, std::string producer_id, Bytes nonce) {
    if (nonce.size() != kNonceSize) throw std::invalid_argument("nonce must be 32 bytes");
    Block b;
    b.parent_id = parent_id;
    b.kind = BlockKind::Work;
    b.height = height;
    b.timestamp = timestamp;
    b.difficulty = difficulty;
    b.producer_id = std::move(producer_id);
    b.proof = WorkProof{std::move(nonce)};
    b.id = block_id(b);
    return b;
}

Block make_stake_block(const Hash256& parent_id, std::uint64_t height, double timestamp,
                       double difficulty, std::string producer_id, const Hash256& seed) {
    Block b;
    b.parent_id = parent_id;
    b.kind = BlockKind::Stake;
    b.height = height;
    b.timestamp = timestamp;
    b.difficulty = difficulty;
    b.producer_id = std::move(producer_id);
    b.proof = StakeProof{seed};
    b.id = block_id(b);
    return b;
}

Block make_genesis(double genesis_d_w) {
    return make_work_block(Hash256{}, 0, 0.0, genesis_d_w, "genesis", Bytes(kNonceSize, 0));
}

Hash256 genesis_seed_0_default() { return sha256(as_bytes("unity.genesis.seed.0")); }
Hash256 genesis_seed_1_default() { return sha256(as_bytes("unity.genesis.seed.1")); }

void ProtocolParams::check() const {
    if (!(target_block_time > 0.0)) throw std::invalid_argument("target_block_time must be > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
    if (!(genesis_d_w >= 1.0) || !(genesis_d_s >= 1.0))
        throw std::invalid_argument("genesis difficulties must be >= 1");
    if (!(max_future_drift >= 0.0)) throw std::invalid_argument("max_future_drift must be >= 0");
}

} // namespace unity
