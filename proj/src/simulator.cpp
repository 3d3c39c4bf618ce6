#include "wsn/simulator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wsn {

namespace {

ElectionScheme scheme_for(const NetworkConfig& cfg, const ProtocolOptions& protocol) {
  ElectionScheme s;
  s.kind = protocol.kind;
  s.p_opt = protocol.p_opt;
  s.m_frac = cfg.m_frac;
  s.alpha = cfg.alpha;
  s.validate();
  return s;
}

}  // namespace

Simulation::Simulation(const NetworkConfig& cfg, const RadioParams& radio,
                       const ProtocolOptions& protocol)
    : Simulation(cfg, radio, protocol, deploy(cfg)) {}

Simulation::Simulation(const NetworkConfig& cfg, const RadioParams& radio,
                       const ProtocolOptions& protocol, std::vector<Node> nodes)
    : cfg_(cfg),
      radio_(radio),
      protocol_(protocol),
      scheme_(scheme_for(cfg, protocol)),
      epoch_(EpochState::for_scheme(scheme_)),
      nodes_(std::move(nodes)),
      rng_(round_stream_seed(cfg.rng_seed)) {
  cfg_.validate();
  radio_.validate();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Node& node = nodes_[i];
    if (node.id != i) throw std::invalid_argument("Simulation: node ids must be 0..n-1");
    node.epoch_eligible = true;
    node.asleep = false;
    node.sleep_rounds_remaining = protocol_.uses_sleep() ? kMaxSleepRounds : 0;
  }
}

std::uint32_t Simulation::alive_count() const {
  return static_cast<std::uint32_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.alive(); }));
}

double Simulation::total_residual() const {
  double sum = 0.0;
  for (const Node& node : nodes_) sum += node.residual_energy;
  return sum;
}

std::optional<RoundOutcome> Simulation::run_round() {
  if (alive_count() == 0) return std::nullopt;

  const std::uint64_t r = round_;
  const std::size_t n = nodes_.size();
  const Position bs = cfg_.bs_position;
  const std::uint64_t L = radio_.msg_bits;

  RoundOutcome out;
  out.round_index = static_cast<std::uint32_t>(r + 1);
  out.energy_spent.assign(n, 0.0);
  out.residual_before = total_residual();

  // Sleep lasts one round; everyone is awake for the election.
  for (Node& node : nodes_) node.asleep = false;

  const UniformDraw draw = draw_ ? draw_ : UniformDraw([this] { return rng_.uniform(); });
  out.ch_ids = elect(r, nodes_, scheme_, epoch_, draw);

  std::vector<bool> is_ch(n, false);
  std::vector<Node> heads;
  heads.reserve(out.ch_ids.size());
  for (NodeId id : out.ch_ids) {
    is_ch[id] = true;
    heads.push_back(nodes_[id]);
  }

  std::vector<double> cost(n, 0.0);
  std::vector<std::uint32_t> members_of(n, 0);

  // Cluster formation.
  for (Node& node : nodes_) {
    if (!node.alive()) continue;
    if (is_ch[node.id]) {
      if (protocol_.uses_sleep()) node = tick_sleep(node, true, false);
      continue;
    }
    if (heads.empty()) {
      out.direct_transmitters.push_back(node.id);
      if (protocol_.uses_sleep()) node.sleep_rounds_remaining = kMaxSleepRounds;
      continue;
    }

    SleepDecision decision = member_action(node, heads, bs, radio_);
    if (!protocol_.uses_sleep()) {
      // Baselines always join the nearest CH.
      decision.action = MemberAction::JoinCluster;
      if (!decision.ch_id) {
        const auto nearest = std::min_element(
            heads.begin(), heads.end(), [&](const Node& a, const Node& b) {
              const double da = distance(node.position, a.position);
              const double db = distance(node.position, b.position);
              return da < db || (da == db && a.id < b.id);
            });
        decision.ch_id = nearest->id;
      }
    } else {
      node = tick_sleep(node, false, decision.action == MemberAction::JoinCluster);
    }

    switch (decision.action) {
      case MemberAction::JoinCluster:
        out.assignments.emplace_back(node.id, *decision.ch_id);
        ++members_of[*decision.ch_id];
        cost[node.id] += tx_cost(radio_, L, distance(node.position, nodes_[*decision.ch_id].position));
        break;
      case MemberAction::Sleep:
        out.sleepers.push_back(node.id);
        break;
      case MemberAction::DirectToBs:
        out.direct_transmitters.push_back(node.id);
        break;
    }
  }

  // Relay candidates: alive, awake, advanced, not a CH.
  std::vector<Node> relay_candidates;
  if (protocol_.uses_relays()) {
    for (const Node& node : nodes_) {
      if (node.alive() && node.advanced() && !node.asleep && !is_ch[node.id]) {
        relay_candidates.push_back(node);
      }
    }
  }

  for (NodeId ch_id : out.ch_ids) {
    const Node& ch = nodes_[ch_id];
    cost[ch_id] += static_cast<double>(members_of[ch_id]) * rx_cost(radio_, L);
    cost[ch_id] += static_cast<double>(L) * radio_.e_da * (members_of[ch_id] + 1.0);

    RelayDecision route{ch_id, std::nullopt};
    if (protocol_.uses_relays()) {
      route = select_relay(ch, relay_candidates, bs, radio_);
      out.relays.push_back(route);
    }
    if (route.relay) {
      const Node& relay = nodes_[*route.relay];
      cost[ch_id] += tx_cost(radio_, L, distance(ch.position, relay.position));
      cost[relay.id] += rx_cost(radio_, L) + tx_cost(radio_, L, distance(relay.position, bs));
    } else {
      cost[ch_id] += tx_cost(radio_, L, distance(ch.position, bs));
    }
  }

  for (NodeId id : out.direct_transmitters) {
    cost[id] += tx_cost(radio_, L, distance(nodes_[id].position, bs));
  }

  // Charge, truncating at zero; truncated nodes still delivered this round.
  for (Node& node : nodes_) {
    if (!node.alive() || cost[node.id] == 0.0) continue;
    const double spent = std::min(cost[node.id], node.residual_energy);
    out.energy_spent[node.id] = spent;
    if (spent == node.residual_energy) {
      node.residual_energy = 0.0;
      node.asleep = false;
      node.epoch_eligible = false;
      out.deaths.push_back(node.id);
    } else {
      node.residual_energy -= spent;
    }
  }

  std::sort(out.sleepers.begin(), out.sleepers.end());
  std::sort(out.direct_transmitters.begin(), out.direct_transmitters.end());
  out.packets_at_bs = out.ch_ids.size() + out.direct_transmitters.size();
  out.residual_after = total_residual();
  packets_cum_ += out.packets_at_bs;
  ++round_;
  return out;
}

MetricsSeries Simulation::run(const RoundObserver& observer) {
  MetricsSeries series;
  std::vector<Node> before;
  while (round_ < cfg_.max_rounds) {
    if (observer) before = nodes_;
    auto outcome = run_round();
    if (!outcome) break;

    RoundRecord rec;
    rec.round = outcome->round_index;
    for (const Node& node : nodes_) {
      if (!node.alive()) continue;
      (node.advanced() ? rec.alive_advanced : rec.alive_normal)++;
    }
    rec.ch_count = static_cast<std::uint32_t>(outcome->ch_ids.size());
    rec.sleeper_count = static_cast<std::uint32_t>(outcome->sleepers.size());
    rec.packets_cum = packets_cum_;
    rec.energy_remaining_j = outcome->residual_after;
    series.records.push_back(rec);

    if (observer) observer(*outcome, before);
    if (rec.alive() == 0) break;
  }
  if (series.records.empty()) {
    throw std::logic_error("Simulation::run: no round could be executed");
  }
  series.summary = summarize(series.records, static_cast<std::uint32_t>(nodes_.size()));
  return series;
}

MetricsSeries run_simulation(const NetworkConfig& cfg, const RadioParams& radio,
                             const ProtocolOptions& protocol, const RoundObserver& observer) {
  Simulation sim(cfg, radio, protocol);
  return sim.run(observer);
}

}  // namespace wsn
