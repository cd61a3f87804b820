#pragma once

namespace sqz {

// Central tolerance record. The property suites and validators all read from
// this one knob.
struct Tolerances {
  double norm = 1e-9;          // state normalization
  double unitarity = 1e-10;    // norm drift allowed per evolution op
  double moment_sum = 1e-8;    // <Lx^2>+<Ly^2>+<Lz^2> = l(l+1)
  double amplitude = 1e-9;     // cross-simulator amplitude agreement
  double distribution = 1e-6;  // normalization required of probability inputs
};

inline constexpr Tolerances kTol{};

}  // namespace sqz
