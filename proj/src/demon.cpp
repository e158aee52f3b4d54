#include "mdemon/demon.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace mdemon {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

CycleLedger szilard_cycle(double temperature, double k, double measurement_cost, double efficiency) {
  require_positive(temperature, "temperature");
  require_positive(k, "k");
  if (!(efficiency > 0) || efficiency > 1) throw std::invalid_argument("efficiency must lie in (0, 1]");
  // Relative slack lets a cost computed as k*ln2 by another route through.
  const double bound = k * kLn2;
  if (!(measurement_cost >= bound * (1 - 1e-12)))
    throw std::invalid_argument("measurement cost " + std::to_string(measurement_cost) +
                                " is below the localization bound k ln 2 = " + std::to_string(bound));
  CycleLedger l;
  l.temperature = temperature;
  l.k = k;
  l.delta_s_measurement = measurement_cost;
  l.w_extracted = efficiency * k * temperature * kLn2;
  l.q_reservoir = l.w_extracted;
  l.delta_s_reservoir = -l.q_reservoir / temperature;
  l.delta_s_net = l.delta_s_measurement + l.delta_s_reservoir;
  return l;
}

FreeExpansion free_expansion_entropy(long long molecules, double volume_ratio, double temperature, double k) {
  if (molecules < 1) throw std::invalid_argument("molecule count must be >= 1");
  if (!(volume_ratio > 1) || !std::isfinite(volume_ratio)) throw std::invalid_argument("volume ratio must exceed 1");
  require_positive(temperature, "temperature");
  require_positive(k, "k");
  FreeExpansion f;
  f.delta_s = static_cast<double>(molecules) * k * std::log(volume_ratio);
  f.q_equivalent = temperature * f.delta_s;
  return f;
}

double boltzmann_delta_s(double omega_1, double omega_2, double k) {
  require_positive(omega_1, "omega_1");
  require_positive(omega_2, "omega_2");
  return k * std::log(omega_2 / omega_1);
}

Cell parse_cell(const std::string& s) {
  if (s == "L" || s == "l" || s == "left") return Cell::L;
  if (s == "R" || s == "r" || s == "right") return Cell::R;
  throw std::invalid_argument("unknown cell '" + s + "' (expected L|R)");
}

ResetResult norton_reset(Cell initial) {
  ResetState start{initial, {initial}};
  ResetResult r;
  r.trace.push_back(start);
  if (initial == Cell::L) r.trace.push_back(ResetState{Cell::R, {Cell::R}});
  r.final = r.trace.back();
  return r;
}

AimReport speed_demon_feasibility(double delta_p, double door_width, double hbar) {
  require_positive(delta_p, "delta_p");
  require_positive(door_width, "door width");
  require_positive(hbar, "hbar");
  AimReport a;
  a.delta_p = delta_p;
  a.door_width = door_width;
  a.sigma_x_induced = hbar / (2 * delta_p);
  // Same as sigma_x_induced <= door_width, but evaluated against the exact
  // threshold momentum so the flip happens at hbar/(2 door) to the last bit.
  a.feasible = delta_p >= hbar / (2 * door_width);
  return a;
}

CycleRng::CycleRng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t CycleRng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double CycleRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

CostSampler constant_cost_sampler(double k) {
  return [k](CycleRng&) { return k * kLn2; };
}

CostSampler exponential_excess_sampler(double k, double mean_excess) {
  if (!(mean_excess >= 0)) throw std::invalid_argument("mean excess must be nonnegative");
  return [k, mean_excess](CycleRng& rng) { return k * (kLn2 - mean_excess * std::log1p(-rng.uniform())); };
}

MonteCarloAggregate monte_carlo_cycles(std::size_t n_cycles, double temperature, double k, const CostSampler& sampler,
                                       std::uint64_t seed, double efficiency) {
  if (n_cycles == 0) throw std::invalid_argument("cycle count must be >= 1");
  MonteCarloAggregate agg;
  agg.n_cycles = n_cycles;
  agg.cycles.resize(n_cycles);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      CycleRng rng(seed, i);
      const double cost = sampler(rng);
      const CycleLedger l = szilard_cycle(temperature, k, cost, efficiency);
      agg.cycles[i] = CycleSample{i, cost, l.delta_s_net, l.w_extracted};
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n_cycles / 256));
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (n_cycles + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n_cycles; begin += chunk)
    jobs.push_back(std::async(std::launch::async, run_range, begin, std::min(n_cycles, begin + chunk)));
  for (auto& j : jobs) j.get();

  double sum_net = 0;
  agg.min_delta_s_net = std::numeric_limits<double>::infinity();
  for (const auto& c : agg.cycles) {
    sum_net += c.delta_s_net;
    agg.total_work += c.work;
    agg.min_delta_s_net = std::min(agg.min_delta_s_net, c.delta_s_net);
  }
  agg.mean_delta_s_net = sum_net / static_cast<double>(n_cycles);
  agg.mean_work = agg.total_work / static_cast<double>(n_cycles);
  return agg;
}

}  // namespace mdemon
