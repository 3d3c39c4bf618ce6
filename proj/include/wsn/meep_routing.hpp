#pragma once

#include <optional>
#include <span>

#include "wsn/energy_model.hpp"
#include "wsn/network.hpp"

namespace wsn {

/// Route of one cluster head's aggregated packet.
struct RelayDecision {
  NodeId ch_id = 0;
  std::optional<NodeId> relay;  // empty: direct to the base station

  bool direct() const { return !relay.has_value(); }
  friend bool operator==(const RelayDecision&, const RelayDecision&) = default;
};

/// Two-hop transmit cost ch -> relay -> bs, both hops on the full
/// free-space/multipath model.
double two_hop_cost(const RadioParams& radio, const Position& ch, const Position& relay,
                    const Position& bs);

/// Picks an advanced relay for a normal cluster head. Candidates must be
/// closer to the CH than the base station is; among those the lowest
/// two_hop_cost wins, ties to the lower id. Advanced CHs and CHs with no
/// qualifying candidate go direct. `candidates` is expected to hold only
/// alive, awake, advanced non-CH nodes; others are skipped.
RelayDecision select_relay(const Node& ch, std::span<const Node> candidates,
                           const Position& bs, const RadioParams& radio);

enum class MemberAction { JoinCluster, Sleep, DirectToBs };

struct SleepDecision {
  NodeId node_id = 0;
  MemberAction action = MemberAction::JoinCluster;
  std::optional<NodeId> ch_id;  // set for JoinCluster
  double cost_via_ch = 0.0;     // E1, 0 when there is no CH
  double cost_direct = 0.0;     // E2
};

/// Energy-aware cluster join. With ch* the nearest CH, E1 = tx cost to ch*
/// and E2 = tx cost to the base station. E1 <= E2 joins ch*; otherwise the
/// node sleeps while it has sleep budget left and transmits directly once
/// the budget is spent. No CHs at all means a direct transmission.
SleepDecision member_action(const Node& node, std::span<const Node> chs, const Position& bs,
                            const RadioParams& radio);

/// Sleep bookkeeping after this round's role is known. Becoming CH or
/// finding a cluster worth joining wakes the node with a full budget. Else
/// a node with budget left spends one round of it asleep; at zero it wakes,
/// transmits directly, and the budget refills.
Node tick_sleep(Node node, bool became_ch, bool found_good_cluster);

}  // namespace wsn
