#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leosim/rng.hpp"

namespace leosim::access {

enum class Purpose { kInitial, kHandover };
enum class Outcome { kSuccess, kCollision, kNoCoverage };

const char* to_string(Purpose p);
const char* to_string(Outcome o);
Purpose parse_purpose(const std::string& s);
Outcome parse_outcome(const std::string& s);

struct RachConfig {
  int occasion_period_ms = 80;
  int preambles_initial = 54;
  int preambles_ho = 10;
  int max_attempts = 10;
  int backoff_max_occasions = 3;
  double processing_ms = 10.0;

  void validate() const;
  int pool_size(Purpose p) const { return p == Purpose::kInitial ? preambles_initial : preambles_ho; }
};

struct OccasionOutcome {
  int ue_id = 0;
  int preamble = 0;
  bool success = false;
};

// Each contender draws a preamble uniformly from [0, pool_size) in the given
// order; a preamble picked by exactly one contender succeeds.
std::vector<OccasionOutcome> run_rach_occasion(std::span<const int> contenders, int pool_size, SplitMix64& rng);

struct AccessAttempt {
  std::int64_t slot = 0;
  std::int64_t procedure_id = 0;
  int ue_id = 0;
  int cell_id = 0;
  int sat_id = -1;
  Purpose purpose = Purpose::kInitial;
  bool reestablishment = false;
  int attempt_index = 0;
  std::int64_t occasion_index = 0;
  int preamble = -1;
  Outcome outcome = Outcome::kSuccess;
};

struct ProcedureResult {
  std::int64_t procedure_id = 0;
  int ue_id = 0;
  int cell_id = 0;
  int sat_id = -1;
  Purpose purpose = Purpose::kInitial;
  bool reestablishment = false;
  bool success = false;
  bool no_coverage = false;
  bool aborted = false;
  int attempts = 0;
  std::int64_t start_slot = 0;
  // Slot at which the UE is connected (success) or gives up (failure).
  std::int64_t end_slot = 0;
};

// Runs contention-based random access for many UEs on the shared occasion
// grid. Pools are per (satellite, cell, purpose).
class AccessController {
 public:
  AccessController(RachConfig config, std::uint64_t seed, double slot_s, std::size_t ue_count);

  const RachConfig& config() const { return cfg_; }
  std::int64_t period_slots() const { return period_; }
  std::int64_t processing_slots() const { return processing_; }
  bool is_occasion(std::int64_t slot) const { return slot % period_ == 0; }
  std::int64_t first_occasion_at_or_after(std::int64_t slot) const;

  // Starts a procedure whose first preamble goes on the first occasion at or
  // after `start_slot`. Throws StateError if the UE already has one in flight.
  std::int64_t start(int ue, Purpose purpose, bool reestablishment, int sat, int cell, std::int64_t start_slot);
  bool in_flight(int ue) const;
  int target_sat(int ue) const;
  int cell(int ue) const;
  // Aborts the UE's procedure, if any.
  std::optional<ProcedureResult> abort(int ue, std::int64_t slot);
  // Records a procedure that could not start for lack of coverage.
  ProcedureResult no_coverage(int ue, Purpose purpose, bool reestablishment, int cell, std::int64_t slot,
                              std::vector<AccessAttempt>& log);

  // Resolves every attempt due on the occasion at `slot`.
  void resolve(std::int64_t slot, std::vector<AccessAttempt>& log, std::vector<ProcedureResult>& finished);

  std::size_t pending() const { return active_; }

 private:
  struct Proc {
    bool active = false;
    std::int64_t id = 0;
    Purpose purpose = Purpose::kInitial;
    bool reest = false;
    int sat = -1;
    int cell = -1;
    int attempts = 0;
    std::int64_t start_slot = 0;
    std::int64_t due_occasion = 0;
  };

  RachConfig cfg_;
  std::uint64_t seed_;
  std::int64_t period_;
  std::int64_t processing_;
  std::vector<Proc> procs_;
  std::map<std::int64_t, std::vector<int>> calendar_;
  std::int64_t next_id_ = 0;
  std::size_t active_ = 0;
};

// Procedure-level view of an attempt log.
struct ProcedureSummary {
  std::int64_t procedure_id = 0;
  int ue_id = 0;
  int cell_id = 0;
  Purpose purpose = Purpose::kInitial;
  bool reestablishment = false;
  bool success = false;
  bool no_coverage = false;
};
std::vector<ProcedureSummary> summarize_procedures(std::span<const AccessAttempt> log);

struct AccessScope {
  Purpose purpose = Purpose::kInitial;
  bool include_reestablishment = false;
  std::optional<int> cell;
};

// Succeeded / started over procedures in scope, ignoring no-coverage ones.
// nullopt when no procedure is in scope.
std::optional<double> access_success_probability(std::span<const ProcedureSummary> procs, const AccessScope& scope);
std::optional<double> access_success_probability(std::span<const AccessAttempt> log, const AccessScope& scope);

// Distinct UEs completing initial access, per cell.
std::vector<int> access_capacity(std::span<const AccessAttempt> log, std::size_t cell_count);

}  // namespace leosim::access
