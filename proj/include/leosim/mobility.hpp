#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leosim/access.hpp"
#include "leosim/cells.hpp"
#include "leosim/orbits.hpp"
#include "leosim/rng.hpp"

namespace leosim::mobility {

enum class Variant { kNearest, kSsbPlanNearest };
enum class Combine { kOr, kAnd };

const char* to_string(Variant v);
const char* to_string(Combine c);

struct AssociationPolicy {
  Variant variant = Variant::kNearest;
  double a4_threshold_db = -6.0;
  int t1_lookahead = 1;
  Combine combine = Combine::kOr;
  double min_elevation_deg = 10.0;
  // Nearest scheme: access starts uniformly within this window after the
  // serving change.
  double nearest_window_s = 1.0;

  void validate() const;
};

struct CellAssociation {
  int primary = -1;
  int secondary = -1;
  double primary_slant_km = 0.0;
  double secondary_slant_km = 0.0;

  bool covered() const { return primary >= 0; }
  bool contains(int sat) const { return sat >= 0 && (sat == primary || sat == secondary); }
};

// One entry per cell. Candidates (sorted sat ids) restrict the search; empty
// means the whole constellation. eph[i].sat_id must equal i.
std::vector<CellAssociation> associate(const std::vector<cells::SphericalCell>& cells,
                                       const std::vector<orbits::SatelliteEphemeris>& eph,
                                       const AssociationPolicy& policy, std::span<const int> candidates = {});

enum class Phase { kIdle, kAccessing, kConnected, kHandingOver };
const char* to_string(Phase p);
bool legal_transition(Phase from, Phase to);

struct UeConnState {
  int ue_id = 0;
  Phase phase = Phase::kIdle;
  int serving_sat = -1;
  int candidate_sat = -1;
  double phase_entry_time_s = 0.0;

  // Enforces the transition graph and the serving-satellite invariant.
  void transition(Phase to, double t_s, int serving = -1, int candidate = -1);
};

enum class Trigger { kT1, kA4 };
const char* to_string(Trigger t);
Trigger parse_trigger(const std::string& s);

struct TransitionInfo {
  int cell_id = 0;
  // Association of the current snapshot and the lookahead snapshot.
  CellAssociation current;
  CellAssociation next;
  bool at_boundary = false;
  double time_s = 0.0;
};

struct SsbMeasurement {
  int sat_id = -1;
  double sinr_db = 0.0;
};

struct HoDecision {
  Trigger trigger = Trigger::kT1;
  int source_sat = -1;
  int target_sat = -1;
  // Service from the source stops here.
  double service_loss_s = 0.0;
  // Random access toward the target begins here.
  double start_s = 0.0;
};

// Target prepared for a conditional handover while `serving` is still in the
// current plan but absent from the next one; -1 if none.
int prepared_target(int serving, const CellAssociation& current, const CellAssociation& next);

// `offset_rng` supplies the Nearest-scheme start offset.
std::optional<HoDecision> evaluate_triggers(const UeConnState& ue, const TransitionInfo& info,
                                            std::span<const SsbMeasurement> ssb, const AssociationPolicy& policy,
                                            SplitMix64* offset_rng);

struct HoEvent {
  std::int64_t ho_id = 0;
  int ue_id = 0;
  int cell_id = 0;
  int snapshot = 0;
  Trigger trigger = Trigger::kT1;
  int source_sat = -1;
  int target_sat = -1;
  double service_loss_s = 0.0;
  double start_s = 0.0;
  std::optional<double> end_s;
  bool success = false;
  std::optional<double> interruption_s;
  std::optional<double> access_latency_s;
  int attempts = 0;
  std::string failure_reason;
  bool counted = true;
};

// Puts the UE into handing_over and registers the random access on the
// target's handover pool. Returns the pending event.
HoEvent execute_handover(const HoDecision& decision, UeConnState& ue, int cell_id, access::AccessController& rach,
                         double slot_s, std::int64_t ho_id);

// Completes a pending event from the access outcome and moves the UE on.
void finish_handover(HoEvent& event, UeConnState& ue, const access::ProcedureResult& result, double slot_s,
                     const std::string& failure_reason = "max_attempts");

// Drives isolated handovers through the access controller until all finish.
std::vector<HoEvent> run_handovers(std::span<const HoDecision> decisions, int cell_id,
                                   access::AccessController& rach, double slot_s);

struct CellHoStats {
  int total = 0;
  int failures = 0;
  std::optional<double> failure_rate() const;
};

struct MobilityStats {
  std::vector<CellHoStats> per_cell;
  int total = 0;
  int failures = 0;
  std::vector<double> interruptions_s;

  std::optional<double> global_failure_rate() const;
};

MobilityStats interruption_and_failure_stats(std::span<const HoEvent> events, std::size_t cell_count);

}  // namespace leosim::mobility
