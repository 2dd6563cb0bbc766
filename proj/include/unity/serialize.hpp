// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_SERIALIZE_HPP
#define UNITY_SERIALIZE_HPP

#include <bit>
#include <cstdint>

#include "unity/hash.hpp"

namespace unity {

// Canonical encoding: fixed field order, big-endian integers, IEEE-754 bit
// patterns for reals, 32-bit length prefixes for variable byte arrays.
struct ByteWriter {
    Bytes out;

    void u8(std::uint8_t v) { out.push_back(v); }

    void u32be(std::uint32_t v) {
        for (int i = 3; i >= 0; --i) out.push_back(std::uint8_t(v >> (8 * i)));
    }

    void u64be(std::uint64_t v) {
        for (int i = 7; i >= 0; --i) out.push_back(std::uint8_t(v >> (8 * i)));
    }

    void f64be(double v) { u64be(std::bit_cast<std::uint64_t>(v)); }

    void raw(ByteSpan b) { out.insert(out.end(), b.begin(), b.end()); }

    void sized(ByteSpan b) {
        u32be(static_cast<std::uint32_t>(b.size()));
        raw(b);
    }
};

} // namespace unity

#endif // UNITY_SERIALIZE_HPP
