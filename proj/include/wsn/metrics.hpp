#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wsn {

/// State of the network at the end of one round.
struct RoundRecord {
  std::uint32_t round = 0;  // 1-based
  std::uint32_t alive_normal = 0;
  std::uint32_t alive_advanced = 0;
  std::uint32_t ch_count = 0;
  std::uint32_t sleeper_count = 0;
  std::uint64_t packets_cum = 0;
  double energy_remaining_j = 0.0;

  std::uint32_t alive() const { return alive_normal + alive_advanced; }
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

/// Death rounds are empty when not reached within the simulated rounds.
struct Summary {
  std::uint32_t node_count = 0;
  std::uint32_t rounds_simulated = 0;
  std::optional<std::uint32_t> first_death_round;  // stability period
  std::optional<std::uint32_t> half_death_round;   // alive <= n/2
  std::optional<std::uint32_t> last_death_round;   // network lifetime
  std::uint64_t total_packets = 0;                 // throughput
  double mean_ch_per_round = 0.0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct MetricsSeries {
  std::vector<RoundRecord> records;
  Summary summary;
};

/// Throws std::invalid_argument on an empty series.
Summary summarize(std::span<const RoundRecord> records, std::uint32_t node_count);

enum class Metric { Stability, HalfDeath, Lifetime, Throughput };

inline constexpr Metric kAllMetrics[] = {Metric::Stability, Metric::HalfDeath, Metric::Lifetime,
                                         Metric::Throughput};

std::string_view to_string(Metric metric);

/// Value of `metric` for one run. Unreached death rounds are censored at
/// rounds_simulated.
double metric_value(const Summary& s, Metric metric);
bool metric_censored(const Summary& s, Metric metric);

struct MetricComparison {
  Metric metric = Metric::Stability;
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::optional<double> improvement_pct;  // 100 (mean_a - mean_b) / mean_b; empty if mean_b == 0
  std::uint32_t a_wins = 0;               // paired runs with a strictly greater
  std::uint32_t pairs = 0;
  std::uint32_t censored_a = 0;
  std::uint32_t censored_b = 0;

  double win_fraction() const { return pairs == 0 ? 0.0 : double(a_wins) / pairs; }
};

struct Comparison {
  std::vector<MetricComparison> metrics;  // in kAllMetrics order

  const MetricComparison& at(Metric metric) const;
};

/// Per-metric means over each set and the percentage improvement of a over
/// b. Wins are counted pairwise by index, so a[i] and b[i] must come from
/// the same seed. Throws std::invalid_argument if either set is empty or
/// the sizes differ.
Comparison compare(std::span<const Summary> a, std::span<const Summary> b);

}  // namespace wsn
