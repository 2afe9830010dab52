#pragma once

namespace su11 {

// Default thresholds. Algebraic checks use kDet, point comparisons kGeo,
// region tagging kDisc, the K/A/N band on trace^2 - 4 kClass.
inline constexpr double kDet = 1e-9;
inline constexpr double kGeo = 1e-7;
inline constexpr double kDisc = 1e-9;
inline constexpr double kClass = 1e-9;
inline constexpr double kEvanescent = 1e-12;

}  // namespace su11
