// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/pow.hpp"

#include <cmath>
#include <stdexcept>

namespace unity {

const Uint256& pow_range() {
    static const Uint256 range = Uint256(1) << 256;
    return range;
}

Uint256 hash_to_int(const Hash256& h) {
    Uint256 v = 0;
    for (std::uint8_t b : h) v = (v << 8) | b;
    return v;
}

Uint256 pow_target(double d_w) {
    if (!std::isfinite(d_w) || d_w < 1.0) {
        throw std::invalid_argument("pow_target: difficulty must be finite and >= 1");
    }
    // d_w = m * 2^(exp - 53) with m a 53-bit integer, so
    // 2^256 / d_w = 2^(309 - exp) / m exactly.
    int exp = 0;
    const double mant = std::frexp(d_w, &exp);
    const auto m = Uint256(static_cast<std::uint64_t>(std::ldexp(mant, 53)));
    const int shift = 256 - exp + 53;
    if (shift < 0) return 0;  // d_w > 2^256: no 256-bit digest can pass
    return (Uint256(1) << shift) / m;
}

bool verify_pow(ByteSpan header_bytes, ByteSpan nonce, double d_w, const HashFunction256& hash) {
    const Uint256 target = pow_target(d_w);
    Bytes message;
    message.reserve(header_bytes.size() + nonce.size());
    message.insert(message.end(), header_bytes.begin(), header_bytes.end());
    message.insert(message.end(), nonce.begin(), nonce.end());
    return hash_to_int(hash(message)) <= target;
}

double sample_mining_time(double hash_rate, double d_w, SimRng& rng) {
    if (!(hash_rate > 0.0)) throw std::invalid_argument("sample_mining_time: hash_rate must be > 0");
    if (!(d_w >= 1.0)) throw std::invalid_argument("sample_mining_time: d_w must be >= 1");
    return rng.exponential(hash_rate / d_w);
}

Bytes mint_solution_nonce(const Uint256& target, SimRng& rng) {
    Bytes raw(32);
    rng.fill_bytes(raw);
    Uint256 v = 0;
    for (std::uint8_t b : raw) v = (v << 8) | b;
    v %= target + 1;  // modulo bias is < 2^-52 for any d_w in double range

    Bytes nonce(32, 0);
    for (int i = 31; i >= 0 && v != 0; --i) {
        nonce[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return nonce;
}

} // namespace unity
