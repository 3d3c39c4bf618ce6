#include "wsn/meep_routing.hpp"

#include <limits>

namespace wsn {

double two_hop_cost(const RadioParams& radio, const Position& ch, const Position& relay,
                    const Position& bs) {
  return tx_cost(radio, radio.msg_bits, distance(ch, relay)) +
         tx_cost(radio, radio.msg_bits, distance(relay, bs));
}

RelayDecision select_relay(const Node& ch, std::span<const Node> candidates,
                           const Position& bs, const RadioParams& radio) {
  RelayDecision decision{ch.id, std::nullopt};
  if (ch.advanced()) return decision;

  const double ch_to_bs = distance(ch.position, bs);
  double best = std::numeric_limits<double>::infinity();
  for (const Node& cand : candidates) {
    if (!cand.advanced() || !cand.alive() || cand.asleep || cand.id == ch.id) continue;
    if (!(distance(ch.position, cand.position) < ch_to_bs)) continue;
    const double cost = two_hop_cost(radio, ch.position, cand.position, bs);
    if (cost < best || (cost == best && cand.id < *decision.relay)) {
      best = cost;
      decision.relay = cand.id;
    }
  }
  return decision;
}

SleepDecision member_action(const Node& node, std::span<const Node> chs, const Position& bs,
                            const RadioParams& radio) {
  SleepDecision decision;
  decision.node_id = node.id;
  decision.cost_direct = tx_cost(radio, radio.msg_bits, distance(node.position, bs));
  if (chs.empty()) {
    decision.action = MemberAction::DirectToBs;
    return decision;
  }

  const Node* nearest = nullptr;
  double nearest_d = std::numeric_limits<double>::infinity();
  for (const Node& ch : chs) {
    const double d = distance(node.position, ch.position);
    if (d < nearest_d || (d == nearest_d && ch.id < nearest->id)) {
      nearest_d = d;
      nearest = &ch;
    }
  }
  decision.cost_via_ch = tx_cost(radio, radio.msg_bits, nearest_d);

  if (decision.cost_via_ch <= decision.cost_direct) {
    decision.action = MemberAction::JoinCluster;
    decision.ch_id = nearest->id;
  } else if (node.sleep_rounds_remaining > 0) {
    decision.action = MemberAction::Sleep;
  } else {
    decision.action = MemberAction::DirectToBs;
  }
  return decision;
}

Node tick_sleep(Node node, bool became_ch, bool found_good_cluster) {
  if (became_ch || found_good_cluster) {
    node.sleep_rounds_remaining = kMaxSleepRounds;
    node.asleep = false;
  } else if (node.sleep_rounds_remaining > 0) {
    --node.sleep_rounds_remaining;
    node.asleep = true;
  } else {
    node.sleep_rounds_remaining = kMaxSleepRounds;
    node.asleep = false;
  }
  return node;
}

}  // namespace wsn
