#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsn/energy_model.hpp"
#include "wsn/network.hpp"
#include "wsn/simulator.hpp"

namespace wsn {

using Setting = std::pair<std::string, std::string>;

/// A fully resolvable simulation input: network, radio, protocol, seeds.
struct Scenario {
  std::optional<std::string> preset;
  NetworkConfig network;
  RadioParams radio;
  ProtocolOptions protocol;
  std::vector<std::uint64_t> seeds{1};
  std::string out_dir = ".";

  // The base station follows the field centre unless set explicitly.
  std::optional<double> bs_x;
  std::optional<double> bs_y;

  /// Resolves the base station and validates every component. Throws
  /// ConfigError naming the offending key.
  void finalize();

  /// NetworkConfig for one seed.
  NetworkConfig network_for(std::uint64_t seed) const;

  /// Effective configuration as key/value pairs in a fixed order, using
  /// the same keys that apply_setting() accepts.
  std::vector<Setting> settings() const;
};

/// Known presets ("none" is a no-op): "case1" (m = 0.1, alpha = 5) and "case2" (m = 0.2,
/// alpha = 3), both on the default 100-node, 100 m field with the default
/// radio constants.
void apply_preset(Scenario& s, std::string_view name);

/// Sets one key. Keys: preset, protocol, seed, seeds, n, field, m, alpha,
/// e0, max_rounds, bs_x, bs_y, p_opt, e_elec, eps_fs, eps_mp, e_da,
/// msg_bits, d0, sleep, relay, out. Dashes in keys are read as
/// underscores. Throws ConfigError on an unknown key or bad value.
void apply_setting(Scenario& s, std::string_view key, std::string_view value);

/// Parses the `key = value` config format: one pair per line, `#` starts
/// a comment, blank lines ignored, surrounding whitespace trimmed.
/// Throws ConfigError("config", ...) with the line number on malformed lines.
std::vector<Setting> parse_config(std::string_view text);

/// Builds a scenario from layered settings: defaults, then a preset (the
/// last `preset` key found in either layer), then file settings, then flag
/// settings. Finalizes the result.
Scenario compose_scenario(const std::vector<Setting>& file_settings,
                          const std::vector<Setting>& flag_settings);

ElectionKind parse_protocol(std::string_view name);

/// "7", "1..30" or "1,4,9" (ranges and lists may be mixed: "1..3,10").
std::vector<std::uint64_t> parse_seeds(std::string_view text);

}  // namespace wsn
