#include "wsn/network.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wsn/error.hpp"
#include "wsn/format.hpp"
#include "wsn/rng.hpp"

namespace wsn {

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::string_view to_string(NodeKind kind) {
  return kind == NodeKind::Advanced ? "advanced" : "normal";
}

std::uint32_t NetworkConfig::advanced_count() const {
  return static_cast<std::uint32_t>(std::llround(n * m_frac));
}

void NetworkConfig::validate() const {
  if (n < 1) throw ConfigError("n", "must be at least 1");
  if (!(field_side > 0.0) || !std::isfinite(field_side)) {
    throw ConfigError("field", "must be positive");
  }
  if (!(m_frac >= 0.0 && m_frac <= 1.0)) throw ConfigError("m", "must be in [0, 1]");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha", "must be >= 0");
  if (!(e0 > 0.0) || !std::isfinite(e0)) throw ConfigError("e0", "must be positive");
  if (!std::isfinite(bs_position.x)) throw ConfigError("bs_x", "must be finite");
  if (!std::isfinite(bs_position.y)) throw ConfigError("bs_y", "must be finite");
  if (max_rounds < 1) throw ConfigError("max_rounds", "must be at least 1");
}

double total_initial_energy(const NetworkConfig& cfg) {
  return cfg.n * cfg.e0 * (1.0 + cfg.alpha * cfg.m_frac);
}

std::vector<Node> deploy(const NetworkConfig& cfg) {
  cfg.validate();
  const std::uint32_t advanced = cfg.advanced_count();
  Rng rng(cfg.rng_seed);

  std::vector<Node> nodes;
  nodes.reserve(cfg.n);
  for (NodeId id = 0; id < cfg.n; ++id) {
    Node node;
    node.id = id;
    node.kind = id < advanced ? NodeKind::Advanced : NodeKind::Normal;
    node.position.x = rng.uniform() * cfg.field_side;
    node.position.y = rng.uniform() * cfg.field_side;
    node.initial_energy = node.advanced() ? cfg.e0 * (1.0 + cfg.alpha) : cfg.e0;
    node.residual_energy = node.initial_energy;
    nodes.push_back(node);
  }
  return nodes;
}

void write_deployment_csv(std::ostream& os, const std::vector<Node>& nodes) {
  os << "id,kind,x,y,e_init\n";
  for (const Node& node : nodes) {
    os << node.id << ',' << to_string(node.kind) << ',' << format_double(node.position.x)
       << ',' << format_double(node.position.y) << ',' << format_double(node.initial_energy)
       << '\n';
  }
}

std::vector<Node> read_deployment_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "id,kind,x,y,e_init") {
    throw std::runtime_error("deployment csv: missing or unexpected header");
  }
  std::vector<Node> nodes;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);

    Node node;
    const bool ok = cells.size() == 5 && parse_int(cells[0], node.id) &&
                    (cells[1] == "normal" || cells[1] == "advanced") &&
                    parse_double(cells[2], node.position.x) &&
                    parse_double(cells[3], node.position.y) &&
                    parse_double(cells[4], node.initial_energy);
    if (!ok || node.id != nodes.size()) {
      throw std::runtime_error("deployment csv: malformed row at line " +
                               std::to_string(line_no));
    }
    node.kind = cells[1] == "advanced" ? NodeKind::Advanced : NodeKind::Normal;
    node.residual_energy = node.initial_energy;
    nodes.push_back(node);
  }
  return nodes;
}

}  // namespace wsn
