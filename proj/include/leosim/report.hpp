#pragma once

#include <string>

#include "json.hpp"

namespace leosim::report {

// Aggregates the raw logs of a run directory into the KPI report. Percentiles
// are nearest-rank; KPIs without samples carry null values and count 0.
nlohmann::json build_report(const std::string& run_dir);

// Writes kpi_report.json plus summary.csv, ho_failure_by_cell.csv,
// access_cdf.csv, interruption_cdf.csv and unmet_by_cell.csv.
nlohmann::json write_report(const std::string& run_dir);

std::string sha256_file(const std::string& path);

}  // namespace leosim::report
