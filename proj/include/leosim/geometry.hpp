#pragma once

#include <cmath>

#include "leosim/constants.hpp"

namespace leosim {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3&) const = default;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Point on (or above) the spherical Earth. Degrees; altitude in metres.
struct GeoPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
  double alt_m = 0.0;
};

// Earth-fixed Cartesian position in km on a sphere of radius kEarthRadiusKm.
Vec3 to_ecef(const GeoPoint& p);
GeoPoint from_ecef(const Vec3& r);

// Surface quantities on the sphere.
double central_angle_rad(const GeoPoint& a, const GeoPoint& b);
double great_circle_km(const GeoPoint& a, const GeoPoint& b);
// Bearing clockwise from north, degrees in [0, 360).
double initial_bearing_deg(const GeoPoint& from, const GeoPoint& to);
GeoPoint destination(const GeoPoint& from, double bearing_deg, double distance_km);

// Elevation of `target` above the local horizon of `observer`, both Earth-fixed.
double elevation_deg(const Vec3& observer, const Vec3& target);

}  // namespace leosim
