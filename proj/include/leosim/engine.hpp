#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "leosim/config.hpp"
#include "leosim/kpi.hpp"

namespace leosim::engine {

struct FileEntry {
  std::string name;
  std::uintmax_t bytes = 0;
  std::string sha256;
};

struct RunManifest {
  std::string output_dir;
  std::string version;
  std::uint64_t seed = 0;
  std::string start_time;
  std::string end_time;
  std::string resolved_config;
  std::vector<FileEntry> files;
};

struct RunOptions {
  // Progress lines, one per snapshot. Unset means silent.
  std::function<void(const std::string&)> log;
};

// Full simulation. Writes raw logs, the KPI report and manifest.json into
// config.output_dir and returns the manifest.
RunManifest run(const SimConfig& config, const RunOptions& options = {});

struct CoverageResult {
  kpi::Summary n_asset;
  std::size_t samples = 0;
  std::string output_dir;
};

// Geometry-only pass: N-asset counts per cell and snapshot, no traffic.
// Writes cells.csv, n_asset.csv, kpi_report.json and manifest.json.
CoverageResult coverage(const SimConfig& config, const RunOptions& options = {});

const char* version();

}  // namespace leosim::engine
