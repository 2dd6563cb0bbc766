// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_RNG_HPP
#define UNITY_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace unity {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random source. The uniform and exponential mappings are
/// spelled out here instead of going through std distributions, whose
/// output is not pinned by the standard; replays are bit-stable for a
/// given seed on any conforming implementation.
class SimRng {
public:
    explicit SimRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on (0, 1]; never returns 0, so log(u) is always finite.
    double uniform01() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Exponential draw with the given rate (mean 1/rate).
    double exponential(double rate) { return -std::log(uniform01()) / rate; }

    void fill_bytes(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t v = gen_();
            for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
                out[i] = static_cast<std::uint8_t>(v >> (8 * b));
            }
        }
    }

    /// Independent stream seed for trial `stream` of a scenario seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        return splitmix64(seed ^ splitmix64(stream + 1));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace unity

#endif // UNITY_RNG_HPP
