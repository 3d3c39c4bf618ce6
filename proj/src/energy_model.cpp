#include "wsn/energy_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wsn {

void RadioParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("radio parameter '") + name +
                                  "' must be positive and finite");
    }
  };
  positive(e_elec, "e_elec");
  positive(eps_fs, "eps_fs");
  positive(eps_mp, "eps_mp");
  positive(e_da, "e_da");
  positive(d0, "d0");
  if (msg_bits == 0) {
    throw std::invalid_argument("radio parameter 'msg_bits' must be positive");
  }
}

double crossover_distance(const RadioParams& p) {
  return std::sqrt(p.eps_fs / p.eps_mp);
}

double tx_cost(const RadioParams& p, std::uint64_t bits, double d) {
  if (d < 0.0) {
    throw std::invalid_argument("tx_cost: negative distance");
  }
  const double b = static_cast<double>(bits);
  if (d < p.d0) {
    return b * p.e_elec + b * p.eps_fs * d * d;
  }
  const double d2 = d * d;
  return b * p.e_elec + b * p.eps_mp * d2 * d2;
}

double rx_cost(const RadioParams& p, std::uint64_t bits) {
  return static_cast<double>(bits) * p.e_elec;
}

double ch_round_cost(const RadioParams& p, double n, double k, double d_to_bs) {
  if (!(k >= 1.0)) {
    throw std::invalid_argument("ch_round_cost: k must be >= 1");
  }
  if (n < k) {
    throw std::invalid_argument("ch_round_cost: n must be >= k");
  }
  const double L = p.msg_bits;
  const double per_cluster = n / k;
  return (per_cluster - 1.0) * L * p.e_elec + per_cluster * L * p.e_da +
         L * p.e_elec + L * p.eps_fs * d_to_bs * d_to_bs;
}

double non_ch_round_cost(const RadioParams& p, double d_to_ch) {
  if (d_to_ch < 0.0) {
    throw std::invalid_argument("non_ch_round_cost: negative distance");
  }
  const double L = p.msg_bits;
  return L * (p.e_elec + p.eps_fs * d_to_ch * d_to_ch);
}

double total_network_round_energy(const RadioParams& p, double n, double k,
                                  double d_to_bs, double d_to_ch) {
  if (!(k >= 1.0)) {
    throw std::invalid_argument("total_network_round_energy: k must be >= 1");
  }
  if (n < k) {
    throw std::invalid_argument("total_network_round_energy: n must be >= k");
  }
  const double L = p.msg_bits;
  return L * (2.0 * n * p.e_elec + n * p.e_da + k * p.eps_fs * d_to_bs * d_to_bs +
              n * p.eps_fs * d_to_ch * d_to_ch);
}

double expected_ch_to_bs_distance(double field_side) {
  return 0.765 * field_side / 2.0;
}

double optimal_cluster_count(const RadioParams& p, double n, double field_side) {
  const double d_bs = expected_ch_to_bs_distance(field_side);
  return std::sqrt(n) / std::sqrt(2.0 * std::numbers::pi) * crossover_distance(p) *
         field_side / (d_bs * d_bs);
}

std::uint32_t rounded_cluster_count(double k_opt, std::uint32_t n) {
  const double r = std::floor(k_opt + 0.5);
  const double hi = std::max<double>(1.0, n);
  return static_cast<std::uint32_t>(std::clamp(r, 1.0, hi));
}

double optimal_ch_probability(double k_opt, double n) {
  if (!(n >= 1.0)) {
    throw std::invalid_argument("optimal_ch_probability: n must be >= 1");
  }
  return std::clamp(k_opt / n, 0.0, 1.0);
}

}  // namespace wsn
