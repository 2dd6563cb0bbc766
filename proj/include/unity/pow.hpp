// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_POW_HPP
#define UNITY_POW_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "unity/hash.hpp"
#include "unity/rng.hpp"

namespace unity {

using Uint256 = boost::multiprecision::cpp_int;

/// 2^256 as an exact integer.
const Uint256& pow_range();

/// Digest bytes as an unsigned big-endian integer.
Uint256 hash_to_int(const Hash256& h);

/// floor(2^256 / d_w), computed exactly from the binary decomposition of
/// d_w. Monotone decreasing in d_w. Throws std::invalid_argument for
/// d_w < 1 (the target would exceed the hash range) or non-finite d_w.
Uint256 pow_target(double d_w);

/// True iff H(header || nonce) <= pow_target(d_w). Flooring the target is
/// conservative: a non-integral real target never admits more digests.
bool verify_pow(ByteSpan header_bytes, ByteSpan nonce, double d_w,
                const HashFunction256& hash = pow_hash_function(PowHashKind::Sha256));

/// Draw a time-to-solve from Exp(hash_rate / d_w), mean d_w / hash_rate:
/// the continuum limit of per-hash Bernoulli trials at success rate 1/d_w.
/// Throws std::invalid_argument for hash_rate <= 0 or d_w < 1.
double sample_mining_time(double hash_rate, double d_w, SimRng& rng);

/// A 32-byte nonce whose value is uniform on [0, target]. Under the
/// nonce_value digest such a nonce is a valid solution, which is how the
/// simulator produces Work blocks without grinding.
Bytes mint_solution_nonce(const Uint256& target, SimRng& rng);

} // namespace unity

#endif // UNITY_POW_HPP
