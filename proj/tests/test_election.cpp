#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "wsn/election.hpp"

using namespace wsn;
using doctest::Approx;

namespace {

std::vector<Node> make_nodes(std::uint32_t n, std::uint32_t advanced = 0, double e0 = 0.5,
                             double alpha = 0.0) {
  std::vector<Node> nodes(n);
  for (NodeId i = 0; i < n; ++i) {
    nodes[i].id = i;
    nodes[i].kind = i < advanced ? NodeKind::Advanced : NodeKind::Normal;
    nodes[i].initial_energy = nodes[i].residual_energy = i < advanced ? e0 * (1 + alpha) : e0;
  }
  return nodes;
}

ElectionScheme scheme(ElectionKind kind, double m = 0.0, double alpha = 0.0) {
  return ElectionScheme{kind, 0.1, m, alpha};
}

// Largest double below 1.
constexpr double kAlmostOne = 1.0 - 0x1.0p-53;

}  // namespace

TEST_CASE("weighted probabilities") {
  auto w = weighted_probabilities(0.1, 0.1, 5);
  CHECK(w.normal == Approx(1.0 / 15));
  CHECK(w.advanced == Approx(0.4));
  w = weighted_probabilities(0.1, 0.2, 3);
  CHECK(w.normal == Approx(0.0625));
  CHECK(w.advanced == Approx(0.25));
  w = weighted_probabilities(0.1, 0.3, 0);
  CHECK(w.normal == 0.1);
  CHECK(w.advanced == 0.1);
}

TEST_CASE("expected CH count identity") {
  for (auto [m, alpha] : {std::pair{0.1, 5.0}, std::pair{0.2, 3.0}, std::pair{0.35, 1.7}}) {
    const double n = 100;
    const auto w = weighted_probabilities(0.1, m, alpha);
    CHECK(n * (1 - m) * w.normal + n * m * w.advanced == Approx(n * 0.1).epsilon(1e-14));
  }
}

TEST_CASE("node probability per scheme") {
  auto nodes = make_nodes(2, 1, 0.5, 5.0);
  Node& adv = nodes[0];
  Node& nrm = nodes[1];
  const auto meep = scheme(ElectionKind::Meep, 0.1, 5);

  CHECK(node_probability(meep, nrm) == Approx(1.0 / 15));
  nrm.residual_energy = 0.25;
  CHECK(node_probability(meep, nrm) == Approx(1.0 / 30));
  CHECK(node_probability(meep, adv) == Approx(0.4));
  adv.residual_energy = 0.1;
  CHECK(node_probability(meep, adv) == Approx(0.4));

  CHECK(node_probability(scheme(ElectionKind::Sep, 0.1, 5), nrm) == Approx(1.0 / 15));
  CHECK(node_probability(scheme(ElectionKind::Sep, 0.1, 5), adv) == Approx(0.4));
  CHECK(node_probability(scheme(ElectionKind::Leach), adv) == 0.1);

  nrm.residual_energy = 0.0;
  CHECK_THROWS_AS(node_probability(meep, nrm), std::invalid_argument);
}

TEST_CASE("MEEP normal probability is monotone in residual energy") {
  auto nodes = make_nodes(1);
  const auto meep = scheme(ElectionKind::Meep, 0.1, 5);
  double prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    nodes[0].residual_energy = 0.5 * i / 100.0;
    const double p = node_probability(meep, nodes[0]);
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("residual LEACH threshold scale") {
  auto nodes = make_nodes(1);
  const auto res = scheme(ElectionKind::LeachResidual);
  CHECK(threshold_scale(res, nodes[0]) == 1.0);
  nodes[0].residual_energy = 0.2;  // 40% left
  CHECK(threshold_scale(res, nodes[0]) == Approx(2 * 0.1 * 0.4));
  CHECK(threshold_scale(scheme(ElectionKind::Leach), nodes[0]) == 1.0);
}

TEST_CASE("epoch length") {
  CHECK(epoch_length(0.1) == 10);
  CHECK(epoch_length(1.0 / 15) == 15);
  CHECK(epoch_length(0.4) == 2);
  CHECK(epoch_length(0.0625) == 16);
  CHECK(epoch_length(0.25) == 4);
  CHECK(epoch_length(1.0) == 1);
}

TEST_CASE("threshold") {
  CHECK(threshold(0.1, 0, true) == Approx(0.1));
  CHECK(threshold(0.1, 20, true) == Approx(0.1));
  CHECK(threshold(0.1, 5, true) == Approx(0.2));
  CHECK(threshold(0.1, 15, true) == Approx(0.2));
  CHECK(threshold(0.1, 5, false) == 0.0);
  CHECK(threshold(0.1, 9, true) == Approx(1.0));

  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> up(1e-3, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const double p = up(gen);
    const auto r = gen() % 10000;
    const double t = threshold(p, r, true);
    CHECK(t >= p);
    CHECK(t <= 1.0);
  }
}

TEST_CASE("empty election when nobody is eligible") {
  auto nodes = make_nodes(20);
  for (auto& n : nodes) n.epoch_eligible = false;
  const auto s = scheme(ElectionKind::Leach);
  const auto epoch = EpochState::for_scheme(s);
  int draws = 0;
  const auto heads = elect(3, nodes, s, epoch, [&] { ++draws; return 0.0; });
  CHECK(heads.empty());
  CHECK(draws == 0);
}

TEST_CASE("asleep nodes are skipped") {
  auto nodes = make_nodes(3);
  nodes[1].asleep = true;
  const auto s = scheme(ElectionKind::Leach);
  const auto heads = elect(0, nodes, s, EpochState::for_scheme(s), [] { return 0.0; });
  CHECK(heads == std::vector<NodeId>{0, 2});
}

TEST_CASE("LEACH exhaustion with forced draws") {
  // Draws just under 1 only pass when the threshold reaches 1, which
  // happens in the last round of each 10-round epoch for every node left.
  auto nodes = make_nodes(100);
  const auto s = scheme(ElectionKind::Leach);
  const auto epoch = EpochState::for_scheme(s);
  for (int ep = 0; ep < 3; ++ep) {
    std::vector<int> times(100, 0);
    for (std::uint64_t r = ep * 10; r < ep * 10 + 10; ++r) {
      const auto heads = elect(r, nodes, s, epoch, [] { return kAlmostOne; });
      if (r % 10 != 9) CHECK(heads.empty());
      for (auto id : heads) ++times[id];
    }
    CHECK(std::all_of(times.begin(), times.end(), [](int t) { return t == 1; }));
  }
}

TEST_CASE("LEACH: every node is CH exactly once per epoch with random draws") {
  auto nodes = make_nodes(100);
  const auto s = scheme(ElectionKind::Leach);
  const auto epoch = EpochState::for_scheme(s);
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uint64_t r = 0;
  double total_heads = 0;
  const int epochs = 1000;
  for (int ep = 0; ep < epochs; ++ep) {
    std::vector<int> times(100, 0);
    for (int k = 0; k < 10; ++k, ++r) {
      const auto heads = elect(r, nodes, s, epoch, [&] { return u(gen); });
      total_heads += heads.size();
      for (auto id : heads) ++times[id];
      // elected nodes stay out for the rest of the epoch
      for (auto id : heads) CHECK_FALSE(nodes[id].epoch_eligible);
    }
    REQUIRE(std::all_of(times.begin(), times.end(), [](int t) { return t == 1; }));
  }
  const double mean_per_round = total_heads / (10.0 * epochs);
  CHECK(mean_per_round >= 9.5);
  CHECK(mean_per_round <= 10.5);
}

TEST_CASE("SEP epoch windows reset per class") {
  auto nodes = make_nodes(10, 2, 0.5, 5.0);
  const auto s = scheme(ElectionKind::Sep, 0.2, 5.0);
  const auto epoch = EpochState::for_scheme(s);
  CHECK(epoch.normal_window == 20);  // p_nrm = 0.1/2 = 0.05
  CHECK(epoch.advanced_window == 3);  // p_adv = 0.3

  for (auto& n : nodes) n.epoch_eligible = false;
  epoch.begin_round(3, nodes);  // advanced wrap only
  CHECK(nodes[0].epoch_eligible);
  CHECK_FALSE(nodes[5].epoch_eligible);
  epoch.begin_round(20, nodes);
  CHECK(nodes[5].epoch_eligible);
}

TEST_CASE("dead nodes neither draw nor regain eligibility") {
  auto nodes = make_nodes(4);
  nodes[2].residual_energy = 0.0;
  nodes[2].epoch_eligible = false;
  const auto s = scheme(ElectionKind::Leach);
  int draws = 0;
  const auto heads = elect(0, nodes, s, EpochState::for_scheme(s), [&] { ++draws; return 0.0; });
  CHECK(draws == 3);
  CHECK(std::find(heads.begin(), heads.end(), 2u) == heads.end());
  CHECK_FALSE(nodes[2].epoch_eligible);
}
