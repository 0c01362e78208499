#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leosim/access.hpp"
#include "leosim/cells.hpp"
#include "leosim/linkbudget.hpp"
#include "leosim/mobility.hpp"
#include "leosim/orbits.hpp"
#include "leosim/scheduler.hpp"
#include "leosim/traffic.hpp"

namespace leosim {

enum class InterfererRule { kVisible, kLayers };

struct SimConfig {
  orbits::WalkerConfig walker;
  orbits::Propagator propagator = orbits::Propagator::kKepler;

  cells::TargetArea area;
  double broadcast_radius_km = 59.8;
  double service_radius_km = 22.6;
  InterfererRule interferer_rule = InterfererRule::kVisible;
  int interferer_layers = 1;

  int hotspot_count = 10;
  traffic::UeDensity density;
  traffic::SessionParams sessions;
  // UEs attach once, uniformly within this window after the start.
  double attach_window_s = 10.0;

  linkbudget::LinkBudgetParams link;
  linkbudget::ArrayConfig service_array = linkbudget::ArrayConfig::service();
  linkbudget::ArrayConfig broadcast_array = linkbudget::ArrayConfig::broadcast();
  int service_beams = 50;
  int broadcast_beams = 5;

  double duration_s = 6000.0;
  int snapshots = 600;
  double slot_ms = 1.0;

  access::RachConfig rach;
  mobility::AssociationPolicy mobility;

  scheduler::PfConfig pf;
  scheduler::RateMapParams rate;
  // Strongest interference sources tracked per cell slot by slot; the rest
  // enter through their mean duty cycle.
  int interference_near_sources = 48;

  double n_asset_threshold_db = -6.0;
  int control_plane_messages = 7;
  double user_plane_processing_ms = 0.0;
  double control_plane_processing_ms = 0.0;
  bool availability_all_slots = true;

  std::uint64_t seed = 1;
  std::string output_dir = "out";
  bool illumination_trace = false;
  bool user_plane = true;
  int workers = 1;

  // Throws ConfigError naming the key path of the first violation.
  void validate() const;
  orbits::SnapshotPlan plan() const;
};

SimConfig load_config(const std::string& path);
SimConfig parse_config(const std::string& text, const std::string& origin = "<string>");
// Canonical text: sections in fixed order, one `key = value` per line.
std::string serialize_config(const SimConfig& cfg);
// Sets one dotted key from text; throws ConfigError for unknown keys or bad values.
void set_config_value(SimConfig& cfg, const std::string& key, const std::string& value);
std::vector<std::string> config_keys();

}  // namespace leosim
