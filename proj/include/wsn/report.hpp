#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsn/metrics.hpp"
#include "wsn/scenario.hpp"

namespace wsn {

struct RunResult {
  std::uint64_t seed = 0;
  MetricsSeries series;
};

/// Runs `protocol` once per scenario seed. Runs are independent and spread
/// over `jobs` threads (0 picks the hardware concurrency); results come back
/// in seed-list order regardless of scheduling.
std::vector<RunResult> run_sweep(const Scenario& scenario, ElectionKind protocol,
                                 unsigned jobs = 0);

inline constexpr const char* kSeriesCsvHeader =
    "round,alive_normal,alive_advanced,ch_count,sleeper_count,packets_cum,energy_remaining_j";

// All writers format reals as the shortest round-tripping decimal.

/// Time series CSV. Leading `# key = value` lines echo the provenance
/// settings, then the header row and one row per round.
void write_series_csv(std::ostream& os, const MetricsSeries& series,
                      const std::vector<Setting>& provenance);

/// Flat `key = value` summary. Unreached death rounds print as `not_reached`.
void write_summary_text(std::ostream& os, const Summary& summary,
                        const std::vector<Setting>& provenance);

nlohmann::json summary_json(const Summary& summary);
nlohmann::json settings_json(const std::vector<Setting>& settings);

/// {"config": ..., "runs": [{"seed", "summary"}...], "mean": {...}}
nlohmann::json sweep_json(std::span<const RunResult> runs, const std::vector<Setting>& provenance);

/// Paired comparison: per-seed metric values for both protocols plus the
/// per-metric means, improvement percentages and win counts.
nlohmann::json comparison_json(const Comparison& cmp, std::span<const RunResult> a,
                               std::span<const RunResult> b, const std::string& name_a,
                               const std::string& name_b, const std::vector<Setting>& provenance);

void write_comparison_text(std::ostream& os, const Comparison& cmp, const std::string& name_a,
                           const std::string& name_b);

}  // namespace wsn
