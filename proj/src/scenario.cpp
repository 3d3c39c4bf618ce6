#include "wsn/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "wsn/error.hpp"
#include "wsn/format.hpp"

namespace wsn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string normalize_key(std::string_view key) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

double as_double(const std::string& key, std::string_view value) {
  double v = 0.0;
  if (!parse_double(trim(value), v)) {
    throw ConfigError(key, "expected a number, got '" + std::string(value) + "'");
  }
  return v;
}

template <typename Int>
Int as_int(const std::string& key, std::string_view value) {
  Int v{};
  if (!parse_int(trim(value), v)) {
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return v;
}

bool as_bool(const std::string& key, std::string_view value) {
  const auto v = trim(value);
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw ConfigError(key, "expected true/false, got '" + std::string(value) + "'");
}

}  // namespace

ElectionKind parse_protocol(std::string_view name) {
  name = trim(name);
  if (name == "leach") return ElectionKind::Leach;
  if (name == "leach-res" || name == "leach_res") return ElectionKind::LeachResidual;
  if (name == "sep") return ElectionKind::Sep;
  if (name == "meep") return ElectionKind::Meep;
  throw ConfigError("protocol", "unknown protocol '" + std::string(name) +
                                    "' (expected leach, leach-res, sep or meep)");
}

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  text = trim(text);
  if (text.empty()) throw ConfigError("seeds", "empty seed list");
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(as_int<std::uint64_t>("seeds", item));
      continue;
    }
    const auto lo = as_int<std::uint64_t>("seeds", item.substr(0, dots));
    const auto hi = as_int<std::uint64_t>("seeds", item.substr(dots + 2));
    if (hi < lo) throw ConfigError("seeds", "range '" + std::string(item) + "' is reversed");
    if (hi - lo >= 1'000'000) throw ConfigError("seeds", "range too large");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

void apply_preset(Scenario& s, std::string_view name) {
  name = trim(name);
  if (name == "none") {  // as echoed by settings()
    s.preset.reset();
    return;
  }
  const NetworkConfig defaults;
  s.network.n = defaults.n;
  s.network.field_side = defaults.field_side;
  s.network.e0 = defaults.e0;
  s.radio = RadioParams{};
  s.protocol.p_opt = 0.1;
  if (name == "case1") {
    s.network.m_frac = 0.1;
    s.network.alpha = 5.0;
  } else if (name == "case2") {
    s.network.m_frac = 0.2;
    s.network.alpha = 3.0;
  } else {
    throw ConfigError("preset", "unknown preset '" + std::string(name) +
                                    "' (expected case1 or case2)");
  }
  s.preset = std::string(name);
}

void apply_setting(Scenario& s, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view value = trim(raw_value);

  if (key == "preset") apply_preset(s, value);
  else if (key == "protocol") s.protocol.kind = parse_protocol(value);
  else if (key == "seed") s.seeds = {as_int<std::uint64_t>(key, value)};
  else if (key == "seeds") s.seeds = parse_seeds(value);
  else if (key == "n") s.network.n = as_int<std::uint32_t>(key, value);
  else if (key == "field") s.network.field_side = as_double(key, value);
  else if (key == "m") s.network.m_frac = as_double(key, value);
  else if (key == "alpha") s.network.alpha = as_double(key, value);
  else if (key == "e0") s.network.e0 = as_double(key, value);
  else if (key == "max_rounds") s.network.max_rounds = as_int<std::uint32_t>(key, value);
  else if (key == "bs_x") s.bs_x = as_double(key, value);
  else if (key == "bs_y") s.bs_y = as_double(key, value);
  else if (key == "p_opt") s.protocol.p_opt = as_double(key, value);
  else if (key == "e_elec") s.radio.e_elec = as_double(key, value);
  else if (key == "eps_fs") s.radio.eps_fs = as_double(key, value);
  else if (key == "eps_mp") s.radio.eps_mp = as_double(key, value);
  else if (key == "e_da") s.radio.e_da = as_double(key, value);
  else if (key == "msg_bits") s.radio.msg_bits = as_int<std::uint32_t>(key, value);
  else if (key == "d0") s.radio.d0 = as_double(key, value);
  else if (key == "sleep") s.protocol.sleep_state = as_bool(key, value);
  else if (key == "relay") s.protocol.relay_tier = as_bool(key, value);
  else if (key == "out") s.out_dir = std::string(value);
  else throw ConfigError(key, "unknown configuration key");
}

std::vector<Setting> parse_config(std::string_view text) {
  std::vector<Setting> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
      throw ConfigError("config", "line " + std::to_string(line_no) +
                                      ": expected 'key = value'");
    }
    out.emplace_back(normalize_key(line.substr(0, eq)), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

Scenario compose_scenario(const std::vector<Setting>& file_settings,
                          const std::vector<Setting>& flag_settings) {
  Scenario s;
  std::optional<std::string> preset;
  for (const auto* layer : {&file_settings, &flag_settings}) {
    for (const auto& [key, value] : *layer) {
      if (normalize_key(key) == "preset") preset = value;
    }
  }
  if (preset) apply_preset(s, *preset);
  for (const auto* layer : {&file_settings, &flag_settings}) {
    for (const auto& [key, value] : *layer) {
      if (normalize_key(key) != "preset") apply_setting(s, key, value);
    }
  }
  s.finalize();
  return s;
}

void Scenario::finalize() {
  network.bs_position = {bs_x.value_or(network.field_side / 2.0),
                         bs_y.value_or(network.field_side / 2.0)};
  network.validate();
  try {
    radio.validate();
  } catch (const std::invalid_argument& e) {
    // "radio parameter 'x' must ..." -> report under key x
    const std::string msg = e.what();
    const auto a = msg.find('\'');
    const auto b = msg.find('\'', a + 1);
    throw ConfigError(a == std::string::npos ? "radio" : msg.substr(a + 1, b - a - 1),
                      "must be positive");
  }
  if (!(protocol.p_opt > 0.0 && protocol.p_opt < 1.0)) {
    throw ConfigError("p_opt", "must be in (0, 1)");
  }
  if (seeds.empty()) throw ConfigError("seeds", "empty seed list");
  if (out_dir.empty()) throw ConfigError("out", "empty output path");
}

NetworkConfig Scenario::network_for(std::uint64_t seed) const {
  NetworkConfig cfg = network;
  cfg.rng_seed = seed;
  return cfg;
}

std::vector<Setting> Scenario::settings() const {
  std::vector<Setting> out;
  out.emplace_back("preset", preset.value_or("none"));
  out.emplace_back("protocol", std::string(to_string(protocol.kind)));
  out.emplace_back("n", std::to_string(network.n));
  out.emplace_back("field", format_double(network.field_side));
  out.emplace_back("m", format_double(network.m_frac));
  out.emplace_back("alpha", format_double(network.alpha));
  out.emplace_back("e0", format_double(network.e0));
  out.emplace_back("bs_x", format_double(network.bs_position.x));
  out.emplace_back("bs_y", format_double(network.bs_position.y));
  out.emplace_back("max_rounds", std::to_string(network.max_rounds));
  out.emplace_back("p_opt", format_double(protocol.p_opt));
  out.emplace_back("e_elec", format_double(radio.e_elec));
  out.emplace_back("eps_fs", format_double(radio.eps_fs));
  out.emplace_back("eps_mp", format_double(radio.eps_mp));
  out.emplace_back("e_da", format_double(radio.e_da));
  out.emplace_back("msg_bits", std::to_string(radio.msg_bits));
  out.emplace_back("d0", format_double(radio.d0));
  out.emplace_back("sleep", protocol.sleep_state ? "true" : "false");
  out.emplace_back("relay", protocol.relay_tier ? "true" : "false");
  return out;
}

}  // namespace wsn
