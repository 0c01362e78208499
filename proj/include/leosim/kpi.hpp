#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leosim/cells.hpp"
#include "leosim/linkbudget.hpp"
#include "leosim/orbits.hpp"

namespace leosim::kpi {

// Nearest-rank percentile of an ascending sample, p in (0, 100].
double percentile_sorted(std::span<const double> sorted, double p);

struct Summary {
  std::size_t count = 0;
  double p5 = 0.0;
  double p50 = 0.0;
  double p95 = 0.0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;

  bool empty() const { return count == 0; }
};
Summary summarize(std::vector<double> values);

struct NAssetParams {
  linkbudget::ArrayConfig service = linkbudget::ArrayConfig::service();
  linkbudget::LinkBudgetParams link;
  double threshold_db = -6.0;
  double min_elevation_deg = 10.0;
};

// Satellites with elevation >= min whose hypothetical service beam steered at
// the point gives SNR above the threshold.
int n_asset_count(const GeoPoint& point, const std::vector<orbits::SatelliteEphemeris>& eph,
                  std::span<const int> candidates, const NAssetParams& params);
std::vector<int> n_asset_coverage(const std::vector<cells::SphericalCell>& cells,
                                  const std::vector<orbits::SatelliteEphemeris>& eph, std::span<const int> candidates,
                                  const NAssetParams& params);

// bps per km^2.
double area_traffic_capacity(double delivered_bits, double area_km2, double duration_s);
double service_availability(std::int64_t lit_slots, std::int64_t total_slots);
// 5th percentile of per-UE throughput over UEs with connected time.
std::optional<double> user_experienced_rate(std::span<const double> per_ue_bps);

struct AnalyticInputs {
  double bandwidth_hz = 30e6;
  double spectral_efficiency_cap = 7.4;
  double slant_km = 508.0;
  double processing_ms = 0.0;
  int control_messages = 7;
};

double peak_data_rate(const AnalyticInputs& in);

enum class Plane { kUser, kControl };
double plane_latency_ms(double slant_km, double processing_ms, Plane plane, int control_messages = 7);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};
// One-sample Kolmogorov-Smirnov test against Uniform[lo, hi].
KsResult ks_uniform(std::vector<double> values, double lo = 0.0, double hi = 1.0);

}  // namespace leosim::kpi
