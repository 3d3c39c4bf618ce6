#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace wsn {

using NodeId = std::uint32_t;

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(const Position& a, const Position& b);

enum class NodeKind : std::uint8_t { Normal, Advanced };

std::string_view to_string(NodeKind kind);

/// Rounds a node may stay asleep in a row before it must transmit directly.
inline constexpr int kMaxSleepRounds = 4;

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Normal;
  Position position;
  double initial_energy = 0.0;
  double residual_energy = 0.0;
  bool epoch_eligible = true;  // membership in the not-yet-elected set
  int sleep_rounds_remaining = 0;
  bool asleep = false;  // radio off for the current round

  bool alive() const { return residual_energy > 0.0; }
  bool advanced() const { return kind == NodeKind::Advanced; }

  friend bool operator==(const Node&, const Node&) = default;
};

struct NetworkConfig {
  std::uint32_t n = 100;
  double field_side = 100.0;
  double m_frac = 0.1;
  double alpha = 5.0;
  double e0 = 0.5;
  Position bs_position{50.0, 50.0};
  std::uint64_t rng_seed = 1;
  std::uint32_t max_rounds = 100000;

  /// Number of advanced nodes, round(n * m_frac).
  std::uint32_t advanced_count() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// n * e0 * (1 + alpha * m_frac).
double total_initial_energy(const NetworkConfig& cfg);

/// Uniform random deployment over [0, field_side]^2. Ids 0..a-1 are the
/// advanced nodes. Positions come from an Rng seeded with cfg.rng_seed,
/// drawn x then y per node in id order.
std::vector<Node> deploy(const NetworkConfig& cfg);

// Deployment CSV: header `id,kind,x,y,e_init`, kind is `normal`/`advanced`.
void write_deployment_csv(std::ostream& os, const std::vector<Node>& nodes);
std::vector<Node> read_deployment_csv(std::istream& is);

}  // namespace wsn
