#include "wsn/election.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wsn/error.hpp"

namespace wsn {

namespace {
std::atomic<std::uint64_t> g_threshold_clamps{0};
}  // namespace

std::string_view to_string(ElectionKind kind) {
  switch (kind) {
    case ElectionKind::Leach: return "leach";
    case ElectionKind::LeachResidual: return "leach-res";
    case ElectionKind::Sep: return "sep";
    case ElectionKind::Meep: return "meep";
  }
  return "unknown";
}

void ElectionScheme::validate() const {
  if (!(p_opt > 0.0 && p_opt < 1.0)) throw ConfigError("p_opt", "must be in (0, 1)");
  if (!(m_frac >= 0.0 && m_frac <= 1.0)) throw ConfigError("m", "must be in [0, 1]");
  if (!(alpha >= 0.0)) throw ConfigError("alpha", "must be >= 0");
}

WeightedProbabilities weighted_probabilities(double p_opt, double m_frac, double alpha) {
  const double denom = 1.0 + alpha * m_frac;
  return {p_opt / denom, p_opt * (1.0 + alpha) / denom};
}

double node_probability(const ElectionScheme& scheme, const Node& node) {
  if (!node.alive()) {
    throw std::invalid_argument("node_probability: node " + std::to_string(node.id) +
                                " is dead");
  }
  switch (scheme.kind) {
    case ElectionKind::Leach:
    case ElectionKind::LeachResidual:
      return scheme.p_opt;
    case ElectionKind::Sep: {
      const auto w = weighted_probabilities(scheme.p_opt, scheme.m_frac, scheme.alpha);
      return node.advanced() ? w.advanced : w.normal;
    }
    case ElectionKind::Meep: {
      const auto w = weighted_probabilities(scheme.p_opt, scheme.m_frac, scheme.alpha);
      if (node.advanced()) return w.advanced;
      return w.normal * node.residual_energy / node.initial_energy;
    }
  }
  return 0.0;
}

double threshold_scale(const ElectionScheme& scheme, const Node& node) {
  if (scheme.kind != ElectionKind::LeachResidual) return 1.0;
  if (node.residual_energy > 0.5 * node.initial_energy) return 1.0;
  return 2.0 * scheme.p_opt * node.residual_energy / node.initial_energy;
}

std::uint32_t epoch_length(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("epoch_length: p must be positive");
  const double len = std::floor(1.0 / p + 1e-9);
  if (len < 1.0) return 1;
  if (len > 4.0e9) return 4'000'000'000u;
  return static_cast<std::uint32_t>(len);
}

double threshold(double p_i, std::uint64_t r, bool eligible) {
  if (!eligible || !(p_i > 0.0)) return 0.0;
  if (p_i >= 1.0) return 1.0;
  const double phase = static_cast<double>(r % epoch_length(p_i));
  const double denom = 1.0 - p_i * phase;
  if (denom <= 0.0) {
    g_threshold_clamps.fetch_add(1, std::memory_order_relaxed);
    return 1.0;
  }
  const double t = p_i / denom;
  return t > 1.0 ? 1.0 : t;
}

std::uint64_t threshold_clamps() {
  return g_threshold_clamps.load(std::memory_order_relaxed);
}

EpochState EpochState::for_scheme(const ElectionScheme& scheme) {
  EpochState s;
  switch (scheme.kind) {
    case ElectionKind::Leach:
    case ElectionKind::LeachResidual:
      s.normal_window = s.advanced_window = epoch_length(scheme.p_opt);
      break;
    case ElectionKind::Sep:
    case ElectionKind::Meep: {
      const auto w = weighted_probabilities(scheme.p_opt, scheme.m_frac, scheme.alpha);
      s.normal_window = epoch_length(w.normal);
      s.advanced_window = epoch_length(std::min(w.advanced, 1.0));
      break;
    }
  }
  return s;
}

void EpochState::begin_round(std::uint64_t r, std::span<Node> nodes) const {
  const bool wrap_normal = r % normal_window == 0;
  const bool wrap_advanced = r % advanced_window == 0;
  for (Node& node : nodes) {
    if (!node.alive()) continue;
    if (node.advanced() ? wrap_advanced : wrap_normal) node.epoch_eligible = true;
  }
}

std::vector<NodeId> elect(std::uint64_t r, std::span<Node> nodes, const ElectionScheme& scheme,
                          const EpochState& epoch, const UniformDraw& draw) {
  epoch.begin_round(r, nodes);
  std::vector<NodeId> heads;
  for (Node& node : nodes) {
    if (!node.alive() || !node.epoch_eligible || node.asleep) continue;
    const double t = threshold(node_probability(scheme, node), r, true) *
                     threshold_scale(scheme, node);
    if (draw() < t) {
      node.epoch_eligible = false;
      heads.push_back(node.id);
    }
  }
  return heads;
}

}  // namespace wsn
