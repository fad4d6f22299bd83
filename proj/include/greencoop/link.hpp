// link.hpp - AWGN power/bandwidth/rate law and per-BS power demand when
// every terminal is served by its home station on an orthogonal band.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "greencoop/model.hpp"

namespace greencoop {

// Transmit powers below this are indistinguishable from zero in any ledger;
// clamping avoids denormal noise in settlement sums.
inline constexpr double kPowerClampEpsilon = 1e-12;

struct LinkRequirement {
  double rate = 0.0;           // r
  double bandwidth = 0.0;      // W
  double noise_density = 1.0;  // N0
  double gain = 1.0;           // g
};

// P = N0 * W * (2^{r/W} - 1) / g, the transmit power that achieves rate r on
// an AWGN link of bandwidth W. expm1 keeps small-rate results accurate.
inline double awgn_power(double rate, double bandwidth, double noise_density = 1.0,
                         double gain = 1.0) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("awgn_power: bandwidth must be > 0");
  if (!(gain > 0.0)) throw std::invalid_argument("awgn_power: gain must be > 0");
  if (rate < 0.0) throw std::invalid_argument("awgn_power: rate must be >= 0");
  if (rate == 0.0) return 0.0;
  const double p = noise_density * bandwidth * std::expm1(rate / bandwidth * std::numbers::ln2) / gain;
  return p < kPowerClampEpsilon ? 0.0 : p;
}

inline double awgn_power(const LinkRequirement& req) {
  return awgn_power(req.rate, req.bandwidth, req.noise_density, req.gain);
}

// Inverse law: r = W * log2(1 + g*P / (N0*W)).
inline double awgn_rate(double power, double bandwidth, double noise_density = 1.0,
                        double gain = 1.0) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("awgn_rate: bandwidth must be > 0");
  if (!(noise_density > 0.0)) throw std::invalid_argument("awgn_rate: noise_density must be > 0");
  if (power < 0.0) throw std::invalid_argument("awgn_rate: power must be >= 0");
  return bandwidth * std::log1p(gain * power / (noise_density * bandwidth)) / std::numbers::ln2;
}

// Received-power target implied by the AWGN law: any coherent combination
// delivering at least S = N0 * w * (2^{r/w} - 1) meets the rate on width w.
inline double comp_target(double rate, double sub_band_width, double noise_density = 1.0) {
  if (!(sub_band_width > 0.0)) throw std::invalid_argument("comp_target: sub-band width must be > 0");
  if (rate < 0.0) throw std::invalid_argument("comp_target: rate must be >= 0");
  if (rate == 0.0) return 0.0;
  return noise_density * sub_band_width * std::expm1(rate / sub_band_width * std::numbers::ln2);
}

// Each BS splits its own band equally among its home terminals (one terminal
// per sub-band) and serves each at exactly its minimum rate.
inline PowerProfile conventional_demand(const Scenario& s) {
  PowerProfile q;
  q.per_bs_power.assign(s.bs_count(), 0.0);
  for (std::size_t b = 0; b < s.bs_count(); ++b) {
    const auto mts = s.home_terminals(b);
    if (mts.empty()) continue;
    if (!(s.base_stations[b].bandwidth > 0.0))
      throw infeasible_error("conventional_demand: base station " + std::to_string(b) +
                             " has terminals but no bandwidth");
    const double w = s.base_stations[b].bandwidth / static_cast<double>(mts.size());
    double total = 0.0;
    for (std::size_t m : mts)
      total += awgn_power(s.terminals[m].min_rate, w, s.noise_density, s.channel.gain(b, m));
    q.per_bs_power[b] = total;
  }
  return q;
}

}  // namespace greencoop
