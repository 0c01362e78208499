#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leosim/cells.hpp"
#include "leosim/geometry.hpp"

namespace leosim::linkbudget {

using cells::AntennaFrame;
using cells::Direction;

enum class BeamTier { kBroadcast, kService };

struct ArrayConfig {
  int elements_x = 20;
  int elements_y = 20;
  double element_spacing_wl = 0.5;
  double boresight_eirp_density_dbw_mhz = 41.41;
  BeamTier tier = BeamTier::kService;
  // Cosine-shaped element: 3 dB beamwidth and attenuation floor.
  double element_beamwidth_deg = 65.0;
  double element_floor_db = 30.0;

  static ArrayConfig service();
  static ArrayConfig broadcast();
  void validate() const;
  // Exponent q of the cos^q element power pattern.
  double element_exponent() const;
};

struct LinkBudgetParams {
  double carrier_ghz = 3.65;
  double bandwidth_mhz = 30.0;
  double shadow_sigma_db = 0.0;
  double extra_loss_db = 5.5;
  double ue_rx_gain_dbi = 0.0;
  double ue_g_over_t_db = -33.62;
  double noise_temperature_k = 2303.0;

  void validate() const;
  double noise_dbw() const;
};

double db_to_lin(double db);
double lin_to_db(double lin);

// Element power pattern relative to its peak, dB (<= 0, floored).
double element_pattern_db(const ArrayConfig& cfg, double theta_rad);
// Normalised array factor power, dB (0 at steer).
double array_factor_db(const ArrayConfig& cfg, Direction steer, Direction eval);
// Array factor times element pattern, normalised to 0 dB at the steer
// direction and never above it.
double array_gain_db(const ArrayConfig& cfg, Direction steer, Direction eval);
// Loss of peak gain when steering away from the array normal: element
// roll-off plus projected-aperture reduction. 0 dB at boresight.
double scan_loss_db(const ArrayConfig& cfg, Direction steer);

double boresight_eirp_dbw(const ArrayConfig& cfg, double bandwidth_mhz);
double effective_eirp_dbw(const ArrayConfig& cfg, double bandwidth_mhz, Direction steer, Direction eval);

double free_space_path_loss_db(double d_km, double f_ghz);
double path_loss_db(double d_km, double f_ghz, double shadow_db = 0.0, double extra_db = 0.0);
double rx_power_dbw(double eirp_dbw, double rx_gain_dbi, double path_loss_db);
double noise_power_dbw(double t_sys_k, double bandwidth_mhz);

// A beam of one satellite phase-steered at a ground point. Evaluates received
// power anywhere with the same chain as effective_eirp / path_loss / rx_power,
// in linear units.
class SteeredBeam {
 public:
  SteeredBeam() = default;
  SteeredBeam(const ArrayConfig& cfg, const AntennaFrame& frame, const Vec3& target_ecef,
              const LinkBudgetParams& params);

  // Received power in watts; 0 if the satellite is below the point's horizon.
  double rx_watts(const Vec3& point_ecef) const;
  double rx_dbw(const Vec3& point_ecef) const;
  Direction steer() const { return steer_; }
  double peak_eirp_dbw() const { return peak_eirp_dbw_; }

 private:
  AntennaFrame frame_;
  Direction steer_;
  double u0_ = 0, v0_ = 0;
  double kx_ = 0, ky_ = 0;
  int mx_ = 1, my_ = 1;
  double q_ = 0;
  double elem0_ = 1;
  double floor_lin_ = 1e-3;
  double numerator_ = 0;
  double peak_eirp_dbw_ = 0;
};

struct SinrSample {
  int ue_id = 0;
  std::int64_t slot = 0;
  double serving_dbw = 0;
  std::optional<double> intra_dbw;
  std::optional<double> inter_dbw;
  double noise_dbw = 0;
  double sinr_db = 0;

  double snr_db() const { return serving_dbw - noise_dbw; }
};

struct ActiveBeam {
  int sat_id = 0;
  int cell_id = 0;
  const SteeredBeam* beam = nullptr;
};

// Serving power from (serving_sat, serving_cell); intra from the same
// satellite's other active beams; inter from active beams of other satellites
// in `interferers` (sorted ids; empty span means every satellite counts).
// Returns nullopt when the serving beam is not active.
std::optional<SinrSample> compute_sinr(int ue_id, std::int64_t slot, const Vec3& ue_ecef, int serving_sat,
                                       int serving_cell, std::span<const ActiveBeam> active,
                                       const LinkBudgetParams& params, std::span<const int> interferers = {});

double sinr_db(double serving_w, double interference_w, double noise_w);

}  // namespace leosim::linkbudget
