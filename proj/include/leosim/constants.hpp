#pragma once

#include <numbers>

namespace leosim {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kEquatorialRadiusKm = 6378.137;
inline constexpr double kMuKm3PerS2 = 398600.4418;
inline constexpr double kJ2 = 1.08263e-3;
inline constexpr double kEarthRotationRadPerS = 7.2921159e-5;

inline constexpr double kSpeedOfLightMPerS = 299792458.0;
inline constexpr double kSpeedOfLightKmPerS = 299792.458;
inline constexpr double kBoltzmann = 1.380649e-23;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace leosim
