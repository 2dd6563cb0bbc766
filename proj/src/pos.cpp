// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/pos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unity/pow.hpp"
#include "unity/serialize.hpp"

namespace unity {

namespace {

Hash256 hash_based_sign(std::string_view staker, const Hash256& prev_seed) {
    ByteWriter w;
    w.raw(as_bytes("seed"));
    w.raw(as_bytes(staker));
    w.raw(ByteSpan{prev_seed.data(), prev_seed.size()});
    return sha256(w.out);
}

} // namespace

const SeedSigner& SeedSigner::hash_based() {
    static const SeedSigner signer{
        [](std::string_view staker, const Hash256& prev) { return hash_based_sign(staker, prev); },
        [](const Hash256& seed, std::string_view staker, const Hash256& prev) {
            return seed == hash_based_sign(staker, prev);
        }};
    return signer;
}

Hash256 next_seed(const Hash256& prev_pos_seed, std::string_view staker) {
    return SeedSigner::hash_based().sign(staker, prev_pos_seed);
}

bool verify_seed(const Hash256& seed, const Hash256& prev_pos_seed, std::string_view staker) {
    return SeedSigner::hash_based().verify(seed, staker, prev_pos_seed);
}

double wait_time_from_hash(const Hash256& value, double stake, double d_s) {
    if (!(stake > 0.0)) throw std::invalid_argument("wait_time: stake must be > 0");
    if (!(d_s > 0.0)) throw std::invalid_argument("wait_time: d_s must be > 0");
    Uint256 v = hash_to_int(value);
    if (v == 0) v = 1;  // probability 2^-256, but the path must be defined
    const double u = v.convert_to<double>() * 0x1.0p-256;  // in (0, 1]
    return d_s * -std::log(u) / stake;
}

double wait_time(const Hash256& seed, double stake, double d_s) {
    return wait_time_from_hash(sha256(ByteSpan{seed.data(), seed.size()}), stake, d_s);
}

double earliest_timestamp(double parent_timestamp, double delta) {
    if (!(delta >= 0.0)) throw std::invalid_argument("earliest_timestamp: delta must be >= 0");
    return parent_timestamp + delta;
}

std::optional<StakerDraw> best_staker_draw(std::span<const StakerSpec> stakers,
                                           const Hash256& prev_pos_seed, double d_s) {
    std::optional<StakerDraw> best;
    for (const StakerSpec& s : stakers) {
        if (!(s.stake > 0.0)) continue;
        const Hash256 seed = next_seed(prev_pos_seed, s.id);
        const double delta = wait_time(seed, s.stake, d_s);
        if (!best || delta < best->delta ||
            (delta == best->delta && seed < best->seed)) {
            best = StakerDraw{s.id, seed, delta};
        }
    }
    return best;
}

} // namespace unity
