// rng.hpp — Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// Each (seed, stream) pair addresses a disjoint 2^64-block counter space, so
// per-trajectory streams derived from (seed0, trajectory index) are
// reproducible and collision-free regardless of worker scheduling.

#pragma once

#include <cstdint>
#include <limits>

namespace pqed {

class Philox4x32 {
public:
    using result_type = std::uint64_t;

    Philox4x32(std::uint64_t seed, std::uint64_t stream) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        ctr_[0] = 0;
        ctr_[1] = 0;
        ctr_[2] = static_cast<std::uint32_t>(stream);
        ctr_[3] = static_cast<std::uint32_t>(stream >> 32);
    }

    std::uint64_t operator()() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        std::uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
        std::uint32_t k[2] = {key_[0], key_[1]};
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = kMul0 * static_cast<std::uint64_t>(c[0]);
            const std::uint64_t p2 = kMul1 * static_cast<std::uint64_t>(c[2]);
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi2 = static_cast<std::uint32_t>(p2 >> 32);
            const std::uint32_t lo2 = static_cast<std::uint32_t>(p2);
            c[0] = hi2 ^ c[1] ^ k[0];
            c[1] = lo2;
            c[2] = hi0 ^ c[3] ^ k[1];
            c[3] = lo0;
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        if (++ctr_[0] == 0) ++ctr_[1];  // low 64 bits of the counter; stream words untouched
        spare_ = (static_cast<std::uint64_t>(c[2]) << 32) | c[3];
        have_ = true;
        return (static_cast<std::uint64_t>(c[0]) << 32) | c[1];
    }

    // uniform double in the open interval (0, 1)
    double uniform() {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t key_[2];
    std::uint32_t ctr_[4];
    std::uint64_t spare_ = 0;
    bool have_ = false;
};

}  // namespace pqed
