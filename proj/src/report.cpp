#include "wsn/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "wsn/format.hpp"

namespace wsn {

std::vector<RunResult> run_sweep(const Scenario& scenario, ElectionKind protocol,
                                 unsigned jobs) {
  const std::size_t count = scenario.seeds.size();
  std::vector<RunResult> results(count);
  ProtocolOptions options = scenario.protocol;
  options.kind = protocol;

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const auto seed = scenario.seeds[i];
        results[i] = {seed, run_simulation(scenario.network_for(seed), scenario.radio, options)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void write_series_csv(std::ostream& os, const MetricsSeries& series,
                      const std::vector<Setting>& provenance) {
  for (const auto& [key, value] : provenance) os << "# " << key << " = " << value << '\n';
  os << kSeriesCsvHeader << '\n';
  for (const RoundRecord& r : series.records) {
    os << r.round << ',' << r.alive_normal << ',' << r.alive_advanced << ',' << r.ch_count << ','
       << r.sleeper_count << ',' << r.packets_cum << ',' << format_double(r.energy_remaining_j)
       << '\n';
  }
}

namespace {

std::string round_or_sentinel(const std::optional<std::uint32_t>& r) {
  return r ? std::to_string(*r) : "not_reached";
}

nlohmann::json round_or_null(const std::optional<std::uint32_t>& r) {
  return r ? nlohmann::json(*r) : nlohmann::json(nullptr);
}

}  // namespace

void write_summary_text(std::ostream& os, const Summary& s,
                        const std::vector<Setting>& provenance) {
  for (const auto& [key, value] : provenance) os << key << " = " << value << '\n';
  os << "node_count = " << s.node_count << '\n'
     << "rounds_simulated = " << s.rounds_simulated << '\n'
     << "first_death_round = " << round_or_sentinel(s.first_death_round) << '\n'
     << "half_death_round = " << round_or_sentinel(s.half_death_round) << '\n'
     << "last_death_round = " << round_or_sentinel(s.last_death_round) << '\n'
     << "total_packets = " << s.total_packets << '\n'
     << "mean_ch_per_round = " << format_double(s.mean_ch_per_round) << '\n';
}

nlohmann::json summary_json(const Summary& s) {
  return {
      {"node_count", s.node_count},
      {"rounds_simulated", s.rounds_simulated},
      {"first_death_round", round_or_null(s.first_death_round)},
      {"half_death_round", round_or_null(s.half_death_round)},
      {"last_death_round", round_or_null(s.last_death_round)},
      {"total_packets", s.total_packets},
      {"mean_ch_per_round", s.mean_ch_per_round},
  };
}

nlohmann::json settings_json(const std::vector<Setting>& settings) {
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [key, value] : settings) cfg[key] = value;
  return cfg;
}

nlohmann::json sweep_json(std::span<const RunResult> runs, const std::vector<Setting>& provenance) {
  nlohmann::json doc;
  doc["config"] = settings_json(provenance);
  doc["runs"] = nlohmann::json::array();
  for (const auto& run : runs) {
    doc["runs"].push_back({{"seed", run.seed}, {"summary", summary_json(run.series.summary)}});
  }
  if (!runs.empty()) {
    nlohmann::json mean;
    for (Metric metric : kAllMetrics) {
      double sum = 0.0;
      std::uint32_t censored = 0;
      for (const auto& run : runs) {
        sum += metric_value(run.series.summary, metric);
        censored += metric_censored(run.series.summary, metric);
      }
      mean[std::string(to_string(metric))] = {{"mean", sum / static_cast<double>(runs.size())},
                                              {"censored", censored}};
    }
    doc["mean"] = mean;
  }
  return doc;
}

nlohmann::json comparison_json(const Comparison& cmp, std::span<const RunResult> a,
                               std::span<const RunResult> b, const std::string& name_a,
                               const std::string& name_b, const std::vector<Setting>& provenance) {
  nlohmann::json doc;
  doc["config"] = settings_json(provenance);
  doc["protocol_a"] = name_a;
  doc["protocol_b"] = name_b;

  doc["pairs"] = nlohmann::json::array();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    doc["pairs"].push_back({{"seed", a[i].seed},
                            {"a", summary_json(a[i].series.summary)},
                            {"b", summary_json(b[i].series.summary)}});
  }

  nlohmann::json metrics;
  for (const auto& m : cmp.metrics) {
    metrics[std::string(to_string(m.metric))] = {
        {"mean_a", m.mean_a},
        {"mean_b", m.mean_b},
        {"improvement_pct", m.improvement_pct ? nlohmann::json(*m.improvement_pct)
                                              : nlohmann::json(nullptr)},
        {"a_wins", m.a_wins},
        {"pairs", m.pairs},
        {"censored_a", m.censored_a},
        {"censored_b", m.censored_b},
    };
  }
  doc["metrics"] = metrics;
  return doc;
}

void write_comparison_text(std::ostream& os, const Comparison& cmp, const std::string& name_a,
                           const std::string& name_b) {
  os << "protocol_a = " << name_a << '\n' << "protocol_b = " << name_b << '\n';
  for (const auto& m : cmp.metrics) {
    const std::string k(to_string(m.metric));
    os << k << ".mean_a = " << format_double(m.mean_a) << '\n'
       << k << ".mean_b = " << format_double(m.mean_b) << '\n'
       << k << ".improvement_pct = "
       << (m.improvement_pct ? format_double(*m.improvement_pct) : std::string("undefined"))
       << '\n'
       << k << ".a_wins = " << m.a_wins << '/' << m.pairs << '\n';
  }
}

}  // namespace wsn
