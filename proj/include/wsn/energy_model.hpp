#pragma once

#include <cstdint>

namespace wsn {

/// First-order radio model constants. Defaults are the reference
/// simulation parameters (d0 = 70 m, which is not the sqrt(eps_fs/eps_mp)
/// crossover of ~87.7 m; see crossover_distance()).
struct RadioParams {
  double e_elec = 5e-9;        // J/bit, TX/RX electronics
  double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
  double e_da = 5e-9;          // J/bit/signal, aggregation
  std::uint32_t msg_bits = 4000;
  double d0 = 70.0;            // m, amplifier branch switch

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;
};

/// sqrt(eps_fs / eps_mp): the distance where both amplifier terms are equal.
double crossover_distance(const RadioParams& p);

/// Transmit cost of `bits` over `d` meters. Free space when d < p.d0,
/// multipath otherwise.
double tx_cost(const RadioParams& p, std::uint64_t bits, double d);

double rx_cost(const RadioParams& p, std::uint64_t bits);

// Closed-form design formulas. These use average cluster sizes and
// distances; the simulator charges actual per-node costs instead.

/// Cluster-head energy for one round with n/k nodes per cluster. The
/// CH->BS hop is always free space here.
double ch_round_cost(const RadioParams& p, double n, double k, double d_to_bs);

double non_ch_round_cost(const RadioParams& p, double d_to_ch);

/// Whole-network energy for one round with k clusters.
double total_network_round_energy(const RadioParams& p, double n, double k,
                                  double d_to_bs, double d_to_ch);

/// Mean CH-to-sink distance for a square field with the sink at its centre.
double expected_ch_to_bs_distance(double field_side);

/// Real-valued optimal number of clusters. Callers round, see
/// rounded_cluster_count().
double optimal_cluster_count(const RadioParams& p, double n, double field_side);

/// Round-half-up, clamped to [1, n].
std::uint32_t rounded_cluster_count(double k_opt, std::uint32_t n);

/// k_opt / n clamped to [0, 1].
double optimal_ch_probability(double k_opt, double n);

}  // namespace wsn
