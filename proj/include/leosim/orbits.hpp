#pragma once

#include <cstdint>
#include <vector>

#include "leosim/constants.hpp"
#include "leosim/geometry.hpp"

namespace leosim::orbits {

enum class WalkerPattern { kDelta, kPolar };
enum class Propagator { kKepler, kJ2 };

struct WalkerConfig {
  WalkerPattern pattern = WalkerPattern::kDelta;
  int plane_count = 60;
  int sats_per_plane = 30;
  double inclination_deg = 55.0;
  double altitude_km = 508.0;
  int phasing_factor = 1;
  double epoch_s = 0.0;

  int total() const { return plane_count * sats_per_plane; }
  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct OrbitalElements {
  int sat_id = 0;
  double semi_major_axis_km = 0.0;
  double eccentricity = 0.0;
  double inclination_rad = 0.0;
  double raan_rad = 0.0;
  double arg_perigee_rad = 0.0;
  double mean_anomaly_rad = 0.0;
};

struct SatelliteEphemeris {
  int sat_id = 0;
  Vec3 position_km;
  Vec3 velocity_kmps;
  int snapshot_index = 0;
};

struct InertialState {
  Vec3 position_km;
  Vec3 velocity_kmps;
};

struct SnapshotPlan {
  int snapshot_count = 0;
  double snapshot_duration_s = 0.0;
  double slot_duration_s = 0.0;
  std::int64_t slots_per_snapshot = 0;

  double total_duration_s() const { return snapshot_count * snapshot_duration_s; }
  std::int64_t total_slots() const { return slots_per_snapshot * snapshot_count; }
  double snapshot_start_s(int s) const { return s * snapshot_duration_s; }
};

double wrap_two_pi(double angle_rad);
double mean_motion_rad_s(double semi_major_axis_km);
double orbital_period_s(double semi_major_axis_km);
double raan_rate_rad_s(const OrbitalElements& el, double j2 = kJ2);

std::vector<OrbitalElements> generate_walker(const WalkerConfig& config);

// Inertial two-body state with an optional secular RAAN rate.
InertialState propagate_inertial(const OrbitalElements& el, double t_s, double raan_rate = 0.0);

SatelliteEphemeris propagate_kepler(const OrbitalElements& el, double t_s);
SatelliteEphemeris propagate_j2(const OrbitalElements& el, double t_s, double j2 = kJ2);

std::vector<SatelliteEphemeris> propagate_all(const std::vector<OrbitalElements>& elements, double t_s,
                                              Propagator propagator, int snapshot_index);

SnapshotPlan build_snapshots(double total_duration_s, int snapshot_count, double slot_duration_s);

}  // namespace leosim::orbits
