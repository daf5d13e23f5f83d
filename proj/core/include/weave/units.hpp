#pragma once

namespace weave {

// Unit conventions used throughout:
//   - user-facing frequencies and couplings are linear MHz (a quantity quoted
//     as "x MHz x 2pi" is stored as the number x),
//   - time is in microseconds,
//   - assembled Hamiltonians are in angular rad/us, i.e. every linear-MHz
//     number is multiplied by 2pi exactly once, here.
inline constexpr double two_pi = 6.28318530717958647692528676655900577;

/// Linear MHz -> angular rad/us.
inline constexpr double to_angular(double mhz) { return two_pi * mhz; }

/// Angular rad/us -> linear MHz.
inline constexpr double to_linear_mhz(double rad_per_us) { return rad_per_us / two_pi; }

} // namespace weave
