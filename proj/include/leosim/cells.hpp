#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "leosim/geometry.hpp"
#include "leosim/orbits.hpp"

namespace leosim::cells {

struct TargetArea {
  double lon_min = 90.0;
  double lon_max = 110.0;
  double lat_min = 25.0;
  double lat_max = 45.0;

  void validate() const;
  bool contains(double lat_deg, double lon_deg) const;
  GeoPoint center() const;
  GeoPoint clamp(const GeoPoint& p) const;
};

enum class Tier { kBroadcast, kService };
enum class TrafficClass { kNormal, kHotspot };

const char* to_string(Tier t);
const char* to_string(TrafficClass c);

struct SphericalCell {
  int cell_id = 0;
  GeoPoint center;
  double circumradius_km = 0.0;
  std::array<GeoPoint, 6> vertices{};
  Tier tier = Tier::kService;
  TrafficClass traffic_class = TrafficClass::kNormal;
  // Bearing of the lattice x axis at the cell center, degrees.
  double axis_bearing_deg = 90.0;
  // Parent broadcast cell for service cells, -1 otherwise.
  int parent_id = -1;

  double area_km2() const;
  bool is_hotspot() const { return traffic_class == TrafficClass::kHotspot; }
};

// Local planar coordinates of `p` in the cell's lattice frame, km.
struct LocalXY {
  double x = 0.0;
  double y = 0.0;
};
LocalXY to_local(const SphericalCell& cell, const GeoPoint& p);
GeoPoint from_local(const SphericalCell& cell, const LocalXY& xy);

// Flat-topped hexagon membership in the cell's local frame.
bool contains_point(const SphericalCell& cell, const GeoPoint& p);

std::vector<SphericalCell> tessellate(const TargetArea& area, double circumradius_km, Tier tier);

// Marks exactly `count` cells as hotspots.
void classify_hotspots(std::vector<SphericalCell>& cells, int count, std::uint64_t seed);

// Lattice neighbours: centre spacing <= sqrt(3) * R * tolerance.
std::vector<std::vector<int>> adjacency(const std::vector<SphericalCell>& cells, double tolerance = 1.01);

// Sets parent_id of each service cell to its nearest broadcast cell.
void assign_parents(std::vector<SphericalCell>& service, const std::vector<SphericalCell>& broadcast);

// Index of the cell nearest to `p` (brute force).
int nearest_cell(const std::vector<SphericalCell>& cells, const GeoPoint& p);

Vec3 geodetic_to_ecef(const GeoPoint& p);
GeoPoint ecef_to_geodetic(const Vec3& r);

// Antenna frame of a satellite: +z to nadir, +x along the velocity projected
// perpendicular to z, +y completing a right-handed frame.
struct AntennaFrame {
  Vec3 origin;
  Vec3 x;
  Vec3 y;
  Vec3 z;
};
AntennaFrame antenna_frame(const orbits::SatelliteEphemeris& sat);

struct Direction {
  double theta_rad = 0.0;
  double phi_rad = 0.0;
};
Direction direction_in_frame(const AntennaFrame& frame, const Vec3& point_ecef);

struct LinkGeometry {
  double elevation_deg = 0.0;
  double azimuth_deg = 0.0;
  double slant_km = 0.0;
  Direction off_boresight;
  double central_angle_rad = 0.0;
};

LinkGeometry link_geometry(const GeoPoint& ue, const orbits::SatelliteEphemeris& sat);
LinkGeometry link_geometry(const GeoPoint& ue, const orbits::SatelliteEphemeris& sat, const AntennaFrame& frame);

// Closed forms on the spherical Earth.
double slant_range_km(double elevation_deg, double altitude_km);
double ground_arc_km(double elevation_deg, double altitude_km);

struct SnapshotSatSets {
  int snapshot_index = 0;
  std::vector<int> target_sat_ids;
  std::vector<int> interferer_sat_ids;
};

std::vector<int> select_target_satellites(const std::vector<orbits::SatelliteEphemeris>& eph,
                                          const TargetArea& area);
std::vector<int> select_interfering_satellites(const std::vector<orbits::SatelliteEphemeris>& eph,
                                               const std::vector<SphericalCell>& cells,
                                               double min_elevation_deg);
// Alternative interference boundary: targets plus `layers` rings of nearest
// neighbours around each member.
std::vector<int> select_layered_satellites(const std::vector<orbits::SatelliteEphemeris>& eph,
                                           const std::vector<int>& target_ids, int layers,
                                           int ring_size = 6);

void write_cells_csv(const std::string& path, const std::vector<SphericalCell>& cells);

}  // namespace leosim::cells
