#pragma once

#include <array>
#include <cstdint>

namespace arrival {

// Philox4x32-10 counter-based generator. The 64-bit key is the user seed;
// the high counter words carry the stream id, so sub-streams derived from
// (seed, stream) are independent and each supports 2^64 draws. Distinct
// counters map to independent-looking blocks, which makes replica merging
// deterministic regardless of scheduling.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (buffered_ == 0) refill();
        return buffer_[--buffered_];
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on the open interval (0,1): top 53 bits, offset by half an ulp.
    double next_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // One 10-round block; exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::uint32_t k0, std::uint32_t k1) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                k0 += 0x9E3779B9u;
                k1 += 0xBB67AE85u;
            }
            std::uint64_t product0 = std::uint64_t{0xD2511F53u} * counter[0];
            std::uint64_t product1 = std::uint64_t{0xCD9E8D57u} * counter[2];
            counter = {static_cast<std::uint32_t>(product1 >> 32) ^ counter[1] ^ k0,
                       static_cast<std::uint32_t>(product1),
                       static_cast<std::uint32_t>(product0 >> 32) ^ counter[3] ^ k1,
                       static_cast<std::uint32_t>(product0)};
        }
        return counter;
    }

private:
    void refill() {
        buffer_ = block({static_cast<std::uint32_t>(counter_),
                         static_cast<std::uint32_t>(counter_ >> 32), stream_lo_, stream_hi_},
                        key0_, key1_);
        ++counter_;
        buffered_ = 4;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;
};

}  // namespace arrival
