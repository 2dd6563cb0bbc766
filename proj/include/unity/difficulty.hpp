// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_DIFFICULTY_HPP
#define UNITY_DIFFICULTY_HPP

#include "unity/block.hpp"
#include "unity/params.hpp"

namespace unity {

class ChainStore;

/// Median of Exp(lambda): -ln(1/2) / lambda. A block arriving later than
/// this was more likely slow than fast, so it is the decision boundary of
/// the difficulty step. Throws std::invalid_argument for lambda <= 0.
double boundary(double lambda);

/// One multiplicative controller step:
///   delta > boundary  -> d / (1 + alpha)
///   delta = boundary  -> d
///   delta < boundary  -> d * (1 + alpha)
/// The result is floored at 1 so the PoW target stays inside the hash
/// range. The equality branch has measure zero for real-valued timestamps
/// but becomes reachable with quantized inputs.
double adjust(double d_n, double delta, double lambda, double alpha);

/// Difficulty required of a new block of `kind` on top of `parent`: locate
/// the nearest ancestor A of that kind (the parent's parent in a
/// well-formed chain), feed A's own inter-arrival time to adjust().
/// Returns the genesis difficulty while no adjustable ancestor exists.
/// Throws std::out_of_range for an unknown parent.
double next_difficulty(const ChainStore& store, const Hash256& parent, BlockKind kind,
                       const ProtocolParams& params);

} // namespace unity

#endif // UNITY_DIFFICULTY_HPP
