#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace leosim::scheduler {

using Adjacency = std::vector<std::vector<int>>;

struct BeamAssignment {
  int sat_id = 0;
  int beam = 0;
  int cell_id = 0;
};

// Cells lit during the current slot, shared by all satellites of one tier.
class SlotOccupancy {
 public:
  explicit SlotOccupancy(std::size_t cell_count = 0) : lit_(cell_count, 0) {}
  void resize(std::size_t cell_count) {
    lit_.assign(cell_count, 0);
    touched_.clear();
  }
  void clear();
  bool lit(int cell) const { return lit_[static_cast<std::size_t>(cell)] != 0; }
  void mark(int cell);
  const std::vector<int>& lit_cells() const { return touched_; }

 private:
  std::vector<std::uint8_t> lit_;
  std::vector<int> touched_;
};

// Round-robin beam hopping for one satellite. The cycle visits eligible cells
// in cell_id order; a skipped cell keeps its place at the head of the queue,
// a lit cell moves to the back.
class RoundRobinHopper {
 public:
  RoundRobinHopper() = default;
  RoundRobinHopper(int sat_id, std::vector<int> eligible_cells, int beam_count);

  int sat_id() const { return sat_id_; }
  int beam_count() const { return beams_; }
  const std::vector<int>& queue() const { return order_; }

  // Commits up to beam_count beams. With `adjacency`, a candidate conflicts if
  // it or any neighbour is already lit this slot; without, only the cell
  // itself. `usable(cell)` filters candidates without consuming a beam.
  template <class Usable>
  void hop(const Adjacency* adjacency, SlotOccupancy& occupancy, std::vector<BeamAssignment>& out, Usable&& usable);
  void hop(const Adjacency* adjacency, SlotOccupancy& occupancy, std::vector<BeamAssignment>& out) {
    hop(adjacency, occupancy, out, [](int) { return true; });
  }

 private:
  int sat_id_ = 0;
  int beams_ = 0;
  std::vector<int> order_;
  std::vector<int> skipped_;
  std::vector<int> lit_;
};

bool conflicts(const Adjacency* adjacency, const SlotOccupancy& occupancy, int cell);

template <class Usable>
void RoundRobinHopper::hop(const Adjacency* adjacency, SlotOccupancy& occupancy, std::vector<BeamAssignment>& out,
                           Usable&& usable) {
  if (order_.empty() || beams_ <= 0) return;
  skipped_.clear();
  lit_.clear();
  std::size_t i = 0;
  const std::size_t n = order_.size();
  for (; i < n && static_cast<int>(lit_.size()) < beams_; ++i) {
    const int c = order_[i];
    if (!usable(c) || conflicts(adjacency, occupancy, c)) {
      skipped_.push_back(c);
      continue;
    }
    occupancy.mark(c);
    out.push_back({sat_id_, static_cast<int>(lit_.size()), c});
    lit_.push_back(c);
  }
  if (lit_.empty()) return;
  // New queue: skipped, then unvisited, then the cells just lit.
  std::size_t w = 0;
  for (int c : skipped_) order_[w++] = c;
  for (std::size_t k = i; k < n; ++k) order_[w++] = order_[k];
  for (int c : lit_) order_[w++] = c;
}

// One slot of round-robin service-beam hopping with cross-satellite
// interference avoidance. Hoppers are committed in ascending sat_id.
std::vector<BeamAssignment> hop_round_robin(std::span<RoundRobinHopper> hoppers, const Adjacency& adjacency,
                                            SlotOccupancy& occupancy);

// One slot of broadcast sweeping. A broadcast cell already lit this slot by a
// lower-id satellite is deferred by the others.
std::vector<BeamAssignment> coordinate_ssb(std::span<RoundRobinHopper> hoppers, SlotOccupancy& occupancy);

struct PfConfig {
  double time_constant_slots = 100.0;
  double floor_bps = 1.0;
};

class PfState {
 public:
  PfState() = default;
  PfState(std::size_t ue_count, PfConfig config);
  double average(int ue) const { return avg_[static_cast<std::size_t>(ue)]; }
  void update(int ue, double served_bps);
  const PfConfig& config() const { return cfg_; }

 private:
  PfConfig cfg_;
  std::vector<double> avg_;
};

struct PfCandidate {
  int ue_id = 0;
  double rate_bps = 0.0;
  std::int64_t backlog_bits = 0;
};

struct Allocation {
  std::int64_t slot = 0;
  int beam = 0;
  int cell_id = 0;
  int ue_id = 0;
  double bandwidth_hz = 0.0;
  double rate_bps = 0.0;
  std::int64_t bits = 0;
};

// Single-UE-per-slot proportional fair choice among backlogged candidates.
// Ties go to the lowest ue_id. The average of every candidate is updated.
std::optional<Allocation> schedule_pf(std::int64_t slot, int beam, int cell_id, std::span<const PfCandidate> candidates,
                                      PfState& state, double bandwidth_hz, double slot_s);

struct RateMapParams {
  double attenuation = 0.75;
  double max_spectral_efficiency = 7.4;
  double cutoff_db = -10.0;
};

double spectral_efficiency(double sinr_db, const RateMapParams& p = {});
double rate_map(double sinr_db, double bandwidth_hz, const RateMapParams& p = {});

}  // namespace leosim::scheduler
