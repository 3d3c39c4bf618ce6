#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wsn/election.hpp"
#include "wsn/energy_model.hpp"
#include "wsn/meep_routing.hpp"
#include "wsn/metrics.hpp"
#include "wsn/network.hpp"
#include "wsn/rng.hpp"

namespace wsn {

struct ProtocolOptions {
  ElectionKind kind = ElectionKind::Meep;
  double p_opt = 0.1;
  // MEEP mechanisms; ignored for the other protocols.
  bool sleep_state = true;
  bool relay_tier = true;

  bool uses_sleep() const { return kind == ElectionKind::Meep && sleep_state; }
  bool uses_relays() const { return kind == ElectionKind::Meep && relay_tier; }
};

/// Everything that happened in one round.
struct RoundOutcome {
  std::uint32_t round_index = 0;  // 1-based
  std::vector<NodeId> ch_ids;
  std::vector<std::pair<NodeId, NodeId>> assignments;  // (member, ch), by member id
  std::vector<RelayDecision> relays;                   // one per CH when relaying is on
  std::vector<NodeId> sleepers;
  std::vector<NodeId> direct_transmitters;
  std::vector<double> energy_spent;  // indexed by node id
  std::uint64_t packets_at_bs = 0;
  std::vector<NodeId> deaths;
  double residual_before = 0.0;
  double residual_after = 0.0;
};

/// Called after every round with the outcome and the node states as they
/// were when the round started.
using RoundObserver = std::function<void(const RoundOutcome&, std::span<const Node>)>;

/// One run of the round engine. Each round: epoch wrap and election,
/// cluster formation (with MEEP sleep decisions), relay selection for
/// normal CHs, then data-plane energy charging and death bookkeeping.
/// Control traffic is free.
class Simulation {
 public:
  Simulation(const NetworkConfig& cfg, const RadioParams& radio, const ProtocolOptions& protocol);

  /// Starts from a given deployment instead of deploy(cfg).
  Simulation(const NetworkConfig& cfg, const RadioParams& radio, const ProtocolOptions& protocol,
             std::vector<Node> nodes);

  /// Empty once every node is dead.
  std::optional<RoundOutcome> run_round();

  /// Rounds until all nodes die or cfg.max_rounds is hit.
  MetricsSeries run(const RoundObserver& observer = {});

  /// Replaces the per-round uniform source (tests force draws with this).
  void set_draw(UniformDraw draw) { draw_ = std::move(draw); }

  const std::vector<Node>& nodes() const { return nodes_; }
  std::uint64_t rounds_done() const { return round_; }
  const NetworkConfig& config() const { return cfg_; }
  const ElectionScheme& scheme() const { return scheme_; }
  std::uint32_t alive_count() const;
  double total_residual() const;

 private:
  NetworkConfig cfg_;
  RadioParams radio_;
  ProtocolOptions protocol_;
  ElectionScheme scheme_;
  EpochState epoch_;
  std::vector<Node> nodes_;
  std::uint64_t round_ = 0;  // rounds completed; also r for the next election
  std::uint64_t packets_cum_ = 0;
  Rng rng_;
  UniformDraw draw_;
};

MetricsSeries run_simulation(const NetworkConfig& cfg, const RadioParams& radio,
                             const ProtocolOptions& protocol, const RoundObserver& observer = {});

}  // namespace wsn
