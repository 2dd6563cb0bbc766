// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "unity/block.hpp"
#include "unity/params.hpp"
#include "unity/rng.hpp"

using namespace unity;

TEST_CASE("genesis has the pinned canonical serialization and id") {
    const Block genesis = make_genesis(5e6);
    // reference bytes and digest computed with an independent SHA-256
    // implementation (Python hashlib)
    const std::string expected_bytes = std::string(98, '0') +  // parent, kind, height, timestamp
                                       "415312d000000000" +    // difficulty 5e6 as IEEE-754 bits
                                       "00000007" + "67656e65736973" +  // "genesis"
                                       "00000020" + std::string(64, '0');  // 32-byte zero nonce
    CHECK(to_hex(serialize_block(genesis)) == expected_bytes);
    CHECK(to_hex(genesis.id) == "155379af568ea7dedc102ccaefbc1bebaa0a03f5f04602d7a102fd846c846c52");
}

TEST_CASE("identical blocks hash to identical ids") {
    const Block a = make_work_block(Hash256{}, 3, 12.5, 1000.0, "m", Bytes(kNonceSize, 7));
    const Block b = make_work_block(Hash256{}, 3, 12.5, 1000.0, "m", Bytes(kNonceSize, 7));
    CHECK(a.id == b.id);
    CHECK(block_id(a) == a.id);  // stored id reproduces from the serialization
}

TEST_CASE("any field change changes the id") {
    const Block base = make_work_block(Hash256{}, 3, 12.5, 1000.0, "m", Bytes(kNonceSize, 7));
    CHECK(make_work_block(Hash256{}, 3, 12.5, 1000.0, "m", Bytes(kNonceSize, 8)).id != base.id);
    CHECK(make_work_block(Hash256{}, 4, 12.5, 1000.0, "m", Bytes(kNonceSize, 7)).id != base.id);
    CHECK(make_work_block(Hash256{}, 3, 12.6, 1000.0, "m", Bytes(kNonceSize, 7)).id != base.id);
    CHECK(make_work_block(Hash256{}, 3, 12.5, 1001.0, "m", Bytes(kNonceSize, 7)).id != base.id);
    CHECK(make_work_block(Hash256{}, 3, 12.5, 1000.0, "n", Bytes(kNonceSize, 7)).id != base.id);
}

TEST_CASE("id injectivity over a corpus of random blocks") {
    SimRng rng(11);
    std::vector<Hash256> ids;
    for (int i = 0; i < 2000; ++i) {
        Bytes nonce(kNonceSize);
        rng.fill_bytes(nonce);
        Hash256 parent;
        rng.fill_bytes(parent);
        ids.push_back(make_work_block(parent, i % 50, rng.uniform01() * 100.0,
                                      1.0 + rng.uniform01() * 1000.0, "miner", nonce)
                          .id);
    }
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("stake and work proofs are mutually exclusive by construction") {
    const Block w = make_work_block(Hash256{}, 1, 0.0, 2.0, "m", Bytes(kNonceSize, 0));
    CHECK(w.is_work());
    CHECK_THROWS_AS((void)w.seed(), std::bad_variant_access);

    Hash256 seed{};
    seed[0] = 1;
    const Block s = make_stake_block(Hash256{}, 1, 0.0, 2.0, "v", seed);
    CHECK_FALSE(s.is_work());
    CHECK_THROWS_AS((void)s.nonce(), std::bad_variant_access);

    CHECK_THROWS_AS(make_work_block(Hash256{}, 1, 0.0, 2.0, "m", Bytes(8, 0)),
                    std::invalid_argument);  // nonce must be 32 bytes
}

TEST_CASE("header bytes are a strict prefix of the block bytes") {
    const Block b = make_work_block(Hash256{}, 9, 1.25, 64.0, "m", Bytes(kNonceSize, 3));
    const Bytes header = serialize_header(b);
    const Bytes full = serialize_block(b);
    REQUIRE(header.size() < full.size());
    CHECK(std::equal(header.begin(), header.end(), full.begin()));
}

TEST_CASE("protocol params derive lambda from the target block time") {
    ProtocolParams p;
    p.target_block_time = 10.0;
    CHECK(p.lambda() == doctest::Approx(0.1));
    p.target_block_time = 2.0;
    CHECK(p.lambda() == doctest::Approx(0.5));

    p.alpha = -1.0;
    CHECK_THROWS_AS(p.check(), std::invalid_argument);
}
