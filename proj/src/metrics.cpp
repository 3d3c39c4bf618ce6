#include "wsn/metrics.hpp"

#include <stdexcept>

namespace wsn {

Summary summarize(std::span<const RoundRecord> records, std::uint32_t node_count) {
  if (records.empty()) throw std::invalid_argument("summarize: empty series");

  Summary s;
  s.node_count = node_count;
  s.rounds_simulated = records.back().round;
  s.total_packets = records.back().packets_cum;

  std::uint64_t ch_total = 0;
  for (const RoundRecord& rec : records) {
    ch_total += rec.ch_count;
    const std::uint32_t alive = rec.alive();
    if (!s.first_death_round && alive < node_count) s.first_death_round = rec.round;
    if (!s.half_death_round && 2ull * alive <= node_count) s.half_death_round = rec.round;
    if (!s.last_death_round && alive == 0) s.last_death_round = rec.round;
  }
  s.mean_ch_per_round = static_cast<double>(ch_total) / static_cast<double>(records.size());
  return s;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Stability: return "stability";
    case Metric::HalfDeath: return "half_death";
    case Metric::Lifetime: return "lifetime";
    case Metric::Throughput: return "throughput";
  }
  return "unknown";
}

namespace {
const std::optional<std::uint32_t>* death_field(const Summary& s, Metric metric) {
  switch (metric) {
    case Metric::Stability: return &s.first_death_round;
    case Metric::HalfDeath: return &s.half_death_round;
    case Metric::Lifetime: return &s.last_death_round;
    case Metric::Throughput: return nullptr;
  }
  return nullptr;
}
}  // namespace

double metric_value(const Summary& s, Metric metric) {
  if (metric == Metric::Throughput) return static_cast<double>(s.total_packets);
  const auto* field = death_field(s, metric);
  return static_cast<double>(field->value_or(s.rounds_simulated));
}

bool metric_censored(const Summary& s, Metric metric) {
  const auto* field = death_field(s, metric);
  return field != nullptr && !field->has_value();
}

const MetricComparison& Comparison::at(Metric metric) const {
  for (const auto& m : metrics) {
    if (m.metric == metric) return m;
  }
  throw std::out_of_range("Comparison::at: metric missing");
}

Comparison compare(std::span<const Summary> a, std::span<const Summary> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("compare: empty run set");
  if (a.size() != b.size()) throw std::invalid_argument("compare: run sets must be paired");

  Comparison result;
  for (Metric metric : kAllMetrics) {
    MetricComparison mc;
    mc.metric = metric;
    mc.pairs = static_cast<std::uint32_t>(a.size());
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double va = metric_value(a[i], metric);
      const double vb = metric_value(b[i], metric);
      sum_a += va;
      sum_b += vb;
      if (va > vb) ++mc.a_wins;
      mc.censored_a += metric_censored(a[i], metric);
      mc.censored_b += metric_censored(b[i], metric);
    }
    mc.mean_a = sum_a / static_cast<double>(a.size());
    mc.mean_b = sum_b / static_cast<double>(b.size());
    if (mc.mean_b != 0.0) mc.improvement_pct = 100.0 * (mc.mean_a - mc.mean_b) / mc.mean_b;
    result.metrics.push_back(mc);
  }
  return result;
}

}  // namespace wsn
