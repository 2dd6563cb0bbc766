// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/difficulty.hpp"

#include <cmath>
#include <stdexcept>

#include "unity/chain.hpp"

namespace unity {

double boundary(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("boundary: lambda must be > 0");
    return -std::log(0.5) / lambda;
}

double adjust(double d_n, double delta, double lambda, double alpha) {
    if (!(d_n > 0.0)) throw std::invalid_argument("adjust: difficulty must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("adjust: delta must be >= 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("adjust: alpha must be > 0");
    const double b = boundary(lambda);
    double next = d_n;
    if (delta > b) {
        next = d_n / (1.0 + alpha);
    } else if (delta < b) {
        next = d_n * (1.0 + alpha);
    }
    return std::max(next, 1.0);
}

double next_difficulty(const ChainStore& store, const Hash256& parent, BlockKind kind,
                       const ProtocolParams& params) {
    const Block& parent_block = store.block(parent);  // throws on unknown parent
    const double genesis_d = kind == BlockKind::Work ? params.genesis_d_w : params.genesis_d_s;

    const Block* anchor = store.nearest_ancestor_of_kind(parent_block.id, kind);
    if (anchor == nullptr || anchor->id == store.genesis_id()) return genesis_d;

    const Block& anchor_parent = store.block(anchor->parent_id);
    const double delta = anchor->timestamp - anchor_parent.timestamp;
    return adjust(anchor->difficulty, delta, params.lambda(), params.alpha);
}

} // namespace unity
