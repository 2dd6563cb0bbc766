// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_HASH_HPP
#define UNITY_HASH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unity {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;
using Hash256 = std::array<std::uint8_t, 32>;

inline ByteSpan as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// FIPS 180-4 SHA-256 of an arbitrary byte string.
Hash256 sha256(ByteSpan data);

std::string to_hex(ByteSpan data);
inline std::string to_hex(const Hash256& h) { return to_hex(ByteSpan{h.data(), h.size()}); }
std::optional<Bytes> bytes_from_hex(std::string_view hex);
std::optional<Hash256> hash256_from_hex(std::string_view hex);

/// Pluggable digest used by the proof-of-work puzzle. Deterministic map
/// from byte arrays to 256-bit values; SHA-256 in protocol use.
using HashFunction256 = std::function<Hash256(ByteSpan)>;

// Which digest the PoW check runs. NonceValue reads the trailing 32 bytes
// of the input as the digest, which lets the simulator mint verifiable
// solutions without grinding; chains produced that way still verify as a
// real <=-target comparison.
enum class PowHashKind : std::uint8_t { Sha256, NonceValue };

/// Trailing 32 bytes of the input, left-padded with zeros when shorter.
Hash256 nonce_value_digest(ByteSpan data);

const HashFunction256& pow_hash_function(PowHashKind kind);
std::string_view to_string(PowHashKind kind);
std::optional<PowHashKind> pow_hash_from_string(std::string_view name);

struct Hash256Hasher {
    std::size_t operator()(const Hash256& h) const noexcept {
        std::size_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | h[static_cast<std::size_t>(i)];
        return v;
    }
};

} // namespace unity

#endif // UNITY_HASH_HPP
