#pragma once

// Deterministic 64-bit linear congruential generator.  The exact recurrence
// is part of the tool's contract (generator output must be reproducible from
// a seed across platforms), so we spell it out rather than using an
// implementation-defined std engine:
//
//   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//
// next() returns the new state.  Bounded draws reduce the upper 32 bits of
// the state modulo m: with a power-of-two modulus the low state bits have
// short periods (bit 0 alternates every step, so consecutive raw states
// always differ in parity), which would bias consecutive draws badly — e.g.
// two remainder draws in a row could never pick endpoints of equal parity.

#include <cstdint>

namespace eqcol {

class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform-ish draw in [0, m).  m must be positive and < 2^32.
    std::uint64_t next_below(std::uint64_t m) { return (next() >> 32) % m; }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

}  // namespace eqcol
