#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "wsn/network.hpp"

namespace wsn {

enum class ElectionKind : std::uint8_t { Leach, LeachResidual, Sep, Meep };

std::string_view to_string(ElectionKind kind);

struct ElectionScheme {
  ElectionKind kind = ElectionKind::Sep;
  double p_opt = 0.1;
  double m_frac = 0.0;  // only Sep/Meep use the heterogeneity parameters
  double alpha = 0.0;

  void validate() const;
};

struct WeightedProbabilities {
  double normal = 0.0;
  double advanced = 0.0;
};

/// Per-class election probabilities that keep the expected CH count at
/// n * p_opt when advanced nodes carry alpha times extra energy.
WeightedProbabilities weighted_probabilities(double p_opt, double m_frac, double alpha);

/// Reference probability p_i for `node` this round. Throws
/// std::invalid_argument for a dead node.
double node_probability(const ElectionScheme& scheme, const Node& node);

/// Multiplier applied to the threshold. 1 except for LeachResidual nodes at
/// or below half their initial energy, where it is 2p * E_residual / E_init.
double threshold_scale(const ElectionScheme& scheme, const Node& node);

/// floor(1/p), at least 1. A small epsilon absorbs 1/p landing just under
/// an integer (1/(1/15) and friends).
std::uint32_t epoch_length(double p);

/// p / (1 - p * (r mod floor(1/p))) for eligible nodes, 0 otherwise.
/// A non-positive denominator clamps to 1 and bumps threshold_clamps().
double threshold(double p_i, std::uint64_t r, bool eligible);

/// Number of clamped thresholds since process start.
std::uint64_t threshold_clamps();

/// Rotation windows per node class. A class's nodes regain eligibility at
/// every round r with r mod window == 0.
struct EpochState {
  std::uint32_t normal_window = 1;
  std::uint32_t advanced_window = 1;

  static EpochState for_scheme(const ElectionScheme& scheme);

  std::uint32_t window(NodeKind kind) const {
    return kind == NodeKind::Advanced ? advanced_window : normal_window;
  }

  /// Restores eligibility of alive nodes whose class window wraps at r.
  void begin_round(std::uint64_t r, std::span<Node> nodes) const;
};

using UniformDraw = std::function<double()>;

/// One election round. Applies the epoch wrap, then every alive, eligible,
/// awake node (in id order) draws u in [0, 1) and becomes CH iff u < T.
/// Elected nodes leave the eligible set. Returns CH ids in ascending order.
std::vector<NodeId> elect(std::uint64_t r, std::span<Node> nodes, const ElectionScheme& scheme,
                          const EpochState& epoch, const UniformDraw& draw);

}  // namespace wsn
