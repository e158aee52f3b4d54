#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace mdemon {

inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

/// Entropy and energy bookkeeping for one Szilard-engine cycle.
struct CycleLedger {
  double temperature = 1;
  double k = 1;
  double delta_s_measurement = 0;
  double w_extracted = 0;
  double q_reservoir = 0;
  double delta_s_reservoir = 0;
  double delta_s_net = 0;
};

/**
 * Localize (paying `measurement_cost`), then expand isothermally from half to
 * full volume, drawing `efficiency * kT ln 2` of heat from the single reservoir
 * and delivering it as work.
 *
 * Throws std::invalid_argument if the cost is below k ln 2.
 */
CycleLedger szilard_cycle(double temperature, double k, double measurement_cost, double efficiency = 1.0);

struct FreeExpansion {
  double delta_s = 0;
  double q_equivalent = 0;
};

/// N k ln(ratio), with the heat N k T ln(ratio) of the reversible reference path.
FreeExpansion free_expansion_entropy(long long molecules, double volume_ratio, double temperature, double k);

/// k ln(omega_2 / omega_1).
double boltzmann_delta_s(double omega_1, double omega_2, double k);

// Two-cell coarse phase space for the piston reset.
enum class Cell { L, R };

inline const char* to_string(Cell c) { return c == Cell::L ? "L" : "R"; }
Cell parse_cell(const std::string& s);

struct ResetState {
  Cell memory = Cell::R;
  std::set<Cell> occupied_cells;
  std::size_t volume() const { return occupied_cells.size(); }

  friend bool operator==(const ResetState&, const ResetState&) = default;
};

struct ResetResult {
  std::vector<ResetState> trace;
  ResetState final;
};

/// Piston push from left to right: R is left alone, L is moved to R. Volume is moved, never compressed.
ResetResult norton_reset(Cell initial);

struct AimReport {
  double delta_p = 0;
  double sigma_x_induced = 0;
  double door_width = 0;
  bool feasible = false;
};

/// Position spread hbar/(2 delta_p) forced by a momentum measurement of accuracy delta_p, vs. the door width.
AimReport speed_demon_feasibility(double delta_p, double door_width, double hbar = 1.0);

/// Deterministic per-cycle generator: splitmix64-seeded xoshiro256**.
class CycleRng {
 public:
  CycleRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t s_[4];
};

using CostSampler = std::function<double(CycleRng&)>;

/// Always k ln 2.
CostSampler constant_cost_sampler(double k);
/// k ln 2 plus exponentially distributed excess with the given mean (in units of k).
CostSampler exponential_excess_sampler(double k, double mean_excess);

struct CycleSample {
  std::size_t cycle = 0;
  double measurement_cost = 0;
  double delta_s_net = 0;
  double work = 0;
};

struct MonteCarloAggregate {
  std::size_t n_cycles = 0;
  double mean_delta_s_net = 0;
  double min_delta_s_net = 0;
  double total_work = 0;
  double mean_work = 0;
  std::vector<CycleSample> cycles;
};

/**
 * Runs `n_cycles` ledgers with costs drawn from `sampler`. Cycle i uses its own
 * generator derived from (seed, i); cycles are evaluated in parallel and
 * reduced in index order, so results depend only on the seed.
 */
MonteCarloAggregate monte_carlo_cycles(std::size_t n_cycles, double temperature, double k, const CostSampler& sampler,
                                       std::uint64_t seed, double efficiency = 1.0);

}  // namespace mdemon
