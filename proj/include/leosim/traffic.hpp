#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leosim/cells.hpp"

namespace leosim::traffic {

struct UeRecord {
  int ue_id = 0;
  int home_cell_id = 0;
  GeoPoint position;
  std::uint64_t rng_stream_id = 0;
};

struct UeDensity {
  int per_hotspot = 500;
  int per_normal = 100;
};

// One packet of `packet_bits` every `packet_interval_s` of session time,
// starting at arrival.
struct DemandModel {
  double packet_bits = 4e6;
  double packet_interval_s = 3.0;

  int packet_count(double duration_s) const;
  std::int64_t demand_bits(double duration_s) const;
  double required_rate_bps() const { return packet_bits / packet_interval_s; }
};

struct SessionParams {
  double rate_per_s = 1.0 / 300.0;
  double mean_duration_s = 30.0;
  DemandModel demand;

  void validate() const;
};

struct Session {
  int ue_id = 0;
  int index = 0;
  double arrival_s = 0.0;
  double duration_s = 0.0;
  std::int64_t demand_bits = 0;

  double end_s() const { return arrival_s + duration_s; }
};

std::vector<UeRecord> deploy_ues(const std::vector<cells::SphericalCell>& cells, const UeDensity& density,
                                 std::uint64_t seed);

std::vector<Session> generate_sessions(const UeRecord& ue, double horizon_s, const SessionParams& params,
                                       std::uint64_t seed);

void write_workload_csv(const std::string& path, const std::vector<Session>& sessions);
std::vector<Session> read_workload_csv(const std::string& path);

// Per-UE backlog, first-in first-out across that UE's sessions. Counters
// satisfy generated == delivered + backlog + dropped at all times.
class UeBuffer {
 public:
  void inject(int session_index, std::int64_t bits);
  std::int64_t deliver(std::int64_t max_bits);
  // Drops whatever the session still has queued; returns the dropped bits.
  std::int64_t end_session(int session_index);

  std::int64_t backlog() const { return backlog_; }
  std::int64_t generated() const { return generated_; }
  std::int64_t delivered() const { return delivered_; }
  std::int64_t dropped() const { return dropped_; }
  bool conserved() const { return generated_ == delivered_ + backlog_ + dropped_; }

 private:
  std::vector<std::pair<int, std::int64_t>> queue_;
  std::int64_t backlog_ = 0;
  std::int64_t generated_ = 0;
  std::int64_t delivered_ = 0;
  std::int64_t dropped_ = 0;
};

struct RateGap {
  double required_bps = 0.0;
  double offered_bps = 0.0;
  double unmet_bps = 0.0;
};

// Required = generated / window, offered = delivered / window.
RateGap offered_and_required(double generated_bits, double delivered_bits, double window_s);

}  // namespace leosim::traffic
