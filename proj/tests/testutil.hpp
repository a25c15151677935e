#pragma once

#include <cstdint>

namespace qma {

/// Small deterministic generator so property tests are reproducible.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed * 2654435769u + 1) {}

    std::uint64_t next_u64() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    /// Uniform in [0, bound).
    std::uint32_t next(std::uint32_t bound) {
        return static_cast<std::uint32_t>(next_u64() % bound);
    }

private:
    std::uint64_t state_;
};

}  // namespace qma
