// wsnsim: round-based clustered WSN simulator (LEACH, residual LEACH, SEP, MEEP).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsn/error.hpp"
#include "wsn/network.hpp"
#include "wsn/report.hpp"
#include "wsn/scenario.hpp"

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario flags shared by every subcommand. Values stay as strings so
/// the scenario layer does all parsing and validation.
struct ScenarioFlags {
  std::string config_path;
  std::map<std::string, std::string> storage;
  bool no_sleep = false;
  bool no_relay = false;

  void add(CLI::App* app) {
    app->add_option("--config", config_path, "key = value config file (flags override it)");
    const std::pair<const char*, const char*> flags[] = {
        {"--preset", "case1 (m=0.1, alpha=5) or case2 (m=0.2, alpha=3)"},
        {"--protocol", "leach | leach-res | sep | meep"},
        {"--seed", "single seed"},
        {"--seeds", "seed list, e.g. 1..30 or 1,5,9"},
        {"--n", "node count"},
        {"--field", "field side M in meters"},
        {"--m", "fraction of advanced nodes"},
        {"--alpha", "extra energy factor of advanced nodes"},
        {"--e0", "initial energy of a normal node (J)"},
        {"--max-rounds", "round cap"},
        {"--out", "output directory"},
        {"--p-opt", "reference cluster-head probability"},
        {"--d0", "amplifier crossover distance (m)"},
        {"--bs-x", "base station x (default field centre)"},
        {"--bs-y", "base station y (default field centre)"},
        {"--e-elec", "electronics energy (J/bit)"},
        {"--eps-fs", "free-space amplifier (J/bit/m^2)"},
        {"--eps-mp", "multipath amplifier (J/bit/m^4)"},
        {"--e-da", "aggregation energy (J/bit/signal)"},
        {"--msg-bits", "packet length (bits)"},
    };
    for (const auto& [flag, help] : flags) {
      app->add_option(flag, storage[flag], help);
    }
    app->add_flag("--no-sleep", no_sleep, "disable the MEEP sleep state");
    app->add_flag("--no-relay", no_relay, "disable MEEP relaying through advanced nodes");
  }

  /// Flag settings, ordered by flag name (so --seeds overrides --seed).
  std::vector<wsn::Setting> settings(const CLI::App* app) const {
    std::vector<wsn::Setting> out;
    for (const auto& [flag, value] : storage) {
      if (app->count(flag) > 0) out.emplace_back(flag.substr(2), value);
    }
    if (no_sleep) out.emplace_back("sleep", "false");
    if (no_relay) out.emplace_back("relay", "false");
    return out;
  }

  wsn::Scenario resolve(const CLI::App* app) const {
    std::vector<wsn::Setting> file_settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw wsn::ConfigError("config", "cannot read '" + config_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      file_settings = wsn::parse_config(buf.str());
    }
    return wsn::compose_scenario(file_settings, settings(app));
  }
};

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "'");
  }
  return fs::path(dir);
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<wsn::Setting> with_seed(std::vector<wsn::Setting> settings, std::uint64_t seed) {
  settings.emplace_back("seed", std::to_string(seed));
  return settings;
}

int cmd_run(const wsn::Scenario& sc, unsigned jobs) {
  const fs::path dir = prepare_out_dir(sc.out_dir);
  const std::string proto(wsn::to_string(sc.protocol.kind));
  const auto runs = wsn::run_sweep(sc, sc.protocol.kind, jobs);
  const auto provenance = sc.settings();

  for (const auto& run : runs) {
    const std::string stem = proto + "_seed" + std::to_string(run.seed);
    const auto echo = with_seed(provenance, run.seed);
    write_file(dir / (stem + ".csv"),
               [&](std::ostream& os) { wsn::write_series_csv(os, run.series, echo); });
    write_file(dir / (stem + "_summary.txt"),
               [&](std::ostream& os) { wsn::write_summary_text(os, run.series.summary, echo); });
    write_file(dir / (stem + "_summary.json"), [&](std::ostream& os) {
      nlohmann::json doc{{"config", wsn::settings_json(echo)},
                         {"summary", wsn::summary_json(run.series.summary)}};
      os << doc.dump(2) << '\n';
    });
  }
  if (runs.size() > 1) {
    write_file(dir / (proto + "_sweep.json"),
               [&](std::ostream& os) { os << wsn::sweep_json(runs, provenance).dump(2) << '\n'; });
  }

  for (const auto& run : runs) {
    const auto& s = run.series.summary;
    auto show = [](const std::optional<std::uint32_t>& r) {
      return r ? std::to_string(*r) : std::string("not_reached");
    };
    std::cout << proto << " seed " << run.seed << ": first_death=" << show(s.first_death_round)
              << " half_death=" << show(s.half_death_round)
              << " last_death=" << show(s.last_death_round) << " packets=" << s.total_packets
              << '\n';
  }
  return 0;
}

int cmd_compare(wsn::Scenario sc, const std::string& against, unsigned jobs) {
  const fs::path dir = prepare_out_dir(sc.out_dir);
  const auto kind_b = wsn::parse_protocol(against);
  const std::string name_a(wsn::to_string(sc.protocol.kind));
  const std::string name_b(wsn::to_string(kind_b));

  const auto runs_a = wsn::run_sweep(sc, sc.protocol.kind, jobs);
  const auto runs_b = wsn::run_sweep(sc, kind_b, jobs);
  std::vector<wsn::Summary> sa, sb;
  for (const auto& r : runs_a) sa.push_back(r.series.summary);
  for (const auto& r : runs_b) sb.push_back(r.series.summary);
  const auto cmp = wsn::compare(sa, sb);

  auto provenance = sc.settings();
  provenance.emplace_back("against", name_b);
  const std::string stem = "compare_" + name_a + "_vs_" + name_b;
  write_file(dir / (stem + ".json"), [&](std::ostream& os) {
    os << wsn::comparison_json(cmp, runs_a, runs_b, name_a, name_b, provenance).dump(2) << '\n';
  });
  write_file(dir / (stem + ".txt"),
             [&](std::ostream& os) { wsn::write_comparison_text(os, cmp, name_a, name_b); });
  wsn::write_comparison_text(std::cout, cmp, name_a, name_b);
  return 0;
}

int cmd_deploy(const wsn::Scenario& sc) {
  const fs::path dir = prepare_out_dir(sc.out_dir);
  for (auto seed : sc.seeds) {
    const auto nodes = wsn::deploy(sc.network_for(seed));
    write_file(dir / ("deployment_seed" + std::to_string(seed) + ".csv"),
               [&](std::ostream& os) { wsn::write_deployment_csv(os, nodes); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based simulator for clustered heterogeneous wireless sensor networks"};
  app.require_subcommand(1);

  unsigned jobs = 0;
  std::string against = "sep";

  ScenarioFlags run_flags;
  auto* run = app.add_subcommand("run", "simulate one protocol over one or more seeds");
  run_flags.add(run);
  run->add_option("--jobs", jobs, "parallel runs (0 = hardware threads)");

  ScenarioFlags cmp_flags;
  auto* cmp = app.add_subcommand("compare", "paired comparison of --protocol against --against");
  cmp_flags.add(cmp);
  cmp->add_option("--against", against, "baseline protocol (default sep)");
  cmp->add_option("--jobs", jobs, "parallel runs (0 = hardware threads)");

  ScenarioFlags dep_flags;
  auto* dep = app.add_subcommand("deploy", "write the node deployment CSV for each seed");
  dep_flags.add(dep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_flags.resolve(run), jobs);
    if (*cmp) return cmd_compare(cmp_flags.resolve(cmp), against, jobs);
    if (*dep) return cmd_deploy(dep_flags.resolve(dep));
  } catch (const wsn::ConfigError& e) {
    std::cerr << "wsnsim: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "wsnsim: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "wsnsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
