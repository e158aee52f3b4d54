#include "mdemon/acceptance.hpp"

#include "mdemon/demon.hpp"
#include "mdemon/entropy.hpp"
#include "mdemon/state.hpp"
#include "mdemon/szilard.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

namespace mdemon::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Runs `body`, which fills in passed/detail, and enforces a runtime limit.
CriterionResult timed(int id, std::string name, double limit_seconds,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && r.seconds > limit_seconds) {
    r.passed = false;
    r.detail += "; runtime " + fmt(r.seconds) + " s exceeds " + fmt(limit_seconds) + " s";
  }
  return r;
}

Grid<double> default_grid() { return Grid<double>(4096, -8.0, 8.0); }

}  // namespace

CriterionResult partition_cost_exactness() {
  return timed(1, "analytic partition cost equals k ln 2", 1e-3, [](CriterionResult& r) {
    double worst = 0;
    for (double k : {1.0, 1.380649e-23})
      for (double length : {0.1, 1.0, 2.0, 1000.0}) {
        const double expected = k * std::log(2.0);
        const auto e = analytic_partition_event(length, k);
        worst = std::max(worst, std::abs(e.delta_s - expected) / expected);
      }
    r.passed = worst < 1e-12;
    r.detail = "max relative error " + fmt(worst) + " (limit 1e-12)";
  });
}

CriterionResult gaussian_entropy_cross_check() {
  return timed(2, "grid Gaussian entropy matches (1/2) ln(2 pi e sigma^2)", 1.0, [](CriterionResult& r) {
    const Grid<double> grid(4096, -32.0, 32.0);
    double worst = 0;
    const int points = 40;
    for (int i = 0; i < points; ++i) {
      const double sigma = 0.1 * std::pow(40.0, double(i) / (points - 1));
      const auto wf = make_gaussian(grid, 0.0, sigma);
      worst = std::max(worst, std::abs(differential_entropy(wf.density()) - gaussian_entropy(sigma)));
    }
    r.passed = worst < 1e-3;
    r.detail = "sigma in [0.1, 4], n=4096: max deviation " + fmt(worst) + " nats (limit 1e-3)";
  });
}

CriterionResult entropic_uncertainty_corpus() {
  return timed(3, "entropic uncertainty relation over the state corpus", 5.0, [](CriterionResult& r) {
    const auto grid = default_grid();
    const double bound = eur_bound_leipnik();
    const double sharp = eur_bound_sharp();
    std::vector<StateSpec<double>> corpus;
    std::vector<StateSpec<double>> gaussians;
    for (double sigma : {0.25, 0.5, 1.0}) gaussians.push_back(GaussianState<double>{0.0, sigma, 0.0});
    for (double p0 : {-3.0, 2.0, 5.0})
      for (double sigma : {0.5, 1.0}) gaussians.push_back(GaussianState<double>{0.0, sigma, p0});
    corpus = gaussians;
    for (int n = 1; n <= 8; ++n) corpus.push_back(BoxEigenstate<double>{{-1.0, 1.0}, n});
    for (Side side : {Side::Left, Side::Right}) {
      corpus.push_back(TruncatedGaussian<double>{0.0, 1.0 / 3.0, 2.0, side});
      corpus.push_back(TruncatedGaussian<double>{0.0, 0.2, 1.2, side});
    }

    double min_sum = std::numeric_limits<double>::infinity();
    bool all_bound = true;
    for (const auto& s : corpus) {
      const auto rep = eur_report(sample(s, grid), bound);
      all_bound = all_bound && rep.satisfies_eur;
      min_sum = std::min(min_sum, rep.eur_sum);
    }
    double worst_gauss = 0;
    for (const auto& s : gaussians)
      worst_gauss = std::max(worst_gauss, std::abs(eur_report(sample(s, grid), bound).eur_sum - sharp));

    r.passed = all_bound && min_sum >= bound && worst_gauss <= 2e-3;
    r.detail = std::to_string(corpus.size()) + " states, min H_x+H_p " + fmt(min_sum) + " >= ln(e/2) " + fmt(bound) +
               "; Gaussian |sum - ln(pi e)| max " + fmt(worst_gauss) + " (limit 2e-3)";
  });
}

CriterionResult eigenstate_lower_bound() {
  return timed(4, "eigenstate partition cost respects the Gaussian lower bound", 10.0, [](CriterionResult& r) {
    const auto grid = default_grid();
    const auto cmp = gaussian_vs_eigenstate(2.0, grid);
    const double ds = cmp.delta_s_eigenstate_numeric;
    const double floor = std::log(2.0) - kNumericLowerBoundTolerance;
    const double drift = std::abs(ds - kEigenstatePartitionDeltaS);
    r.passed = cmp.lower_bound_respected && ds >= floor && drift <= kNumericLowerBoundTolerance;
    r.detail = "L=2 ground state: delta_s " + fmt(ds) + " >= " + fmt(floor) + "; quadrature reference " +
               fmt(kEigenstatePartitionDeltaS) + " (|diff| " + fmt(drift) + " <= 0.02)";
  });
}

CriterionResult free_expansion() {
  return timed(5, "free expansion entropy and heat", 0, [](CriterionResult& r) {
    bool exact = true;
    for (long long n : {1LL, 2LL, 10LL, 100LL, 1000000LL})
      for (double temperature : {1.0, 300.0}) {
        const auto f = free_expansion_entropy(n, 2.0, temperature, 1.0);
        const double ds = double(n) * std::log(2.0);
        exact = exact && std::abs(f.delta_s - ds) <= 4 * std::numeric_limits<double>::epsilon() * ds &&
                std::abs(f.q_equivalent - temperature * ds) <=
                    4 * std::numeric_limits<double>::epsilon() * temperature * ds;
      }
    double worst_additivity = 0;
    for (double r1 : {1.5, 2.0, 3.7, 10.0})
      for (double r2 : {1.01, 2.0, 5.0, 1e3}) {
        const double lhs = free_expansion_entropy(7, r1 * r2, 1.0, 1.0).delta_s;
        const double rhs =
            free_expansion_entropy(7, r1, 1.0, 1.0).delta_s + free_expansion_entropy(7, r2, 1.0, 1.0).delta_s;
        worst_additivity = std::max(worst_additivity, std::abs(lhs - rhs));
      }
    r.passed = exact && worst_additivity <= 1e-12;
    r.detail = std::string("Nk ln 2 and NkT ln 2 ") + (exact ? "exact" : "MISMATCH") +
               "; log-additivity error " + fmt(worst_additivity) + " (limit 1e-12)";
  });
}

CriterionResult second_law_monte_carlo() {
  return timed(6, "seeded Monte Carlo cycles never decrease total entropy", 5.0, [](CriterionResult& r) {
    const double temperature = 1.0;
    const double k = 1.0;
    const std::uint64_t seed = 20250322;
    const auto sampler = exponential_excess_sampler(k, 0.25);
    const auto a = monte_carlo_cycles(10000, temperature, k, sampler, seed);
    const auto b = monte_carlo_cycles(10000, temperature, k, sampler, seed);
    const double w = k * temperature * std::log(2.0);
    const double work_err = std::abs(a.mean_work - w) / w;
    const bool deterministic = a.mean_delta_s_net == b.mean_delta_s_net && a.min_delta_s_net == b.min_delta_s_net &&
                               a.total_work == b.total_work;
    r.passed = a.min_delta_s_net >= -1e-9 && work_err <= 1e-12 && deterministic;
    r.detail = "10000 cycles: min delta_s_net " + fmt(a.min_delta_s_net) + ", mean delta_s_net " +
               fmt(a.mean_delta_s_net) + ", mean work rel. error " + fmt(work_err) +
               (deterministic ? ", reproducible" : ", NOT reproducible");
  });
}

CriterionResult piston_reset() {
  return timed(7, "piston reset moves phase volume without compressing it", 0, [](CriterionResult& r) {
    bool ok = true;
    for (Cell start : {Cell::L, Cell::R}) {
      const auto res = norton_reset(start);
      ok = ok && res.final.memory == Cell::R && res.trace.front().volume() == 1 && res.final.volume() == 1;
      const auto again = norton_reset(res.final.memory);
      ok = ok && again.final == res.final && again.trace.size() == 1;
    }
    ok = ok && norton_reset(Cell::R).trace.size() == 1;
    r.passed = ok;
    r.detail = ok ? "L -> R and R -> R, volume 1 -> 1, idempotent" : "reset protocol violated";
  });
}

CriterionResult speed_demon_boundary() {
  return timed(8, "speed-demon feasibility boundary", 0, [](CriterionResult& r) {
    bool flips = true;
    for (double hbar : {1.0, 1.054571817e-34})
      for (double door : {1.0, 0.3, 3.0, 1e-9, 42.0}) {
        const double threshold = hbar / (2 * door);
        const double below = std::nextafter(threshold, 0.0);
        const double above = std::nextafter(threshold, std::numeric_limits<double>::infinity());
        flips = flips && speed_demon_feasibility(threshold, door, hbar).feasible &&
                speed_demon_feasibility(above, door, hbar).feasible &&
                !speed_demon_feasibility(below, door, hbar).feasible;
      }
    double worst = 0;
    for (int decade = -10; decade <= 10; ++decade)
      for (double mantissa : {1.0, 2.5, 7.3}) {
        const double dp = mantissa * std::pow(10.0, decade);
        const auto a = speed_demon_feasibility(dp, 1.0, 1.0);
        worst = std::max(worst, std::abs(a.sigma_x_induced * dp - 0.5) / 0.5);
      }
    const bool product_ok = worst <= 2 * std::numeric_limits<double>::epsilon();
    r.passed = flips && product_ok;
    r.detail = std::string("flip at hbar/(2 door): ") + (flips ? "exact" : "WRONG") +
               "; max relative error of sigma_x*delta_p over 20 decades " + fmt(worst);
  });
}

CriterionResult scaling_invariance() {
  return timed(9, "entropies shift by +-ln a under dilation", 0, [](CriterionResult& r) {
    const Grid<double> grid(8192, -16.0, 16.0);
    const std::vector<StateSpec<double>> states = {
        GaussianState<double>{0.0, 0.5, 0.0},
        GaussianState<double>{0.0, 0.7, 2.0},
        BoxEigenstate<double>{{-1.0, 1.0}, 1},
        BoxEigenstate<double>{{-1.0, 1.0}, 3},
    };
    double worst_x = 0, worst_p = 0, worst_sum = 0;
    for (const auto& s : states) {
      const auto base = eur_report(sample(s, grid));
      for (double a : {0.5, 2.0}) {
        const auto scaled = eur_report(sample(dilated(s, a), grid));
        worst_x = std::max(worst_x, std::abs(scaled.h_x - base.h_x - std::log(a)));
        worst_p = std::max(worst_p, std::abs(scaled.h_p - base.h_p + std::log(a)));
        worst_sum = std::max(worst_sum, std::abs(scaled.eur_sum - base.eur_sum));
      }
    }
    r.passed = worst_x <= 2e-3 && worst_p <= 2e-3 && worst_sum <= 4e-3;
    r.detail = "max |dH_x - ln a| " + fmt(worst_x) + ", max |dH_p + ln a| " + fmt(worst_p) +
               " (limit 2e-3); max |d sum| " + fmt(worst_sum) + " (limit 4e-3)";
  });
}

std::vector<CriterionResult> run_all() {
  return {partition_cost_exactness(), gaussian_entropy_cross_check(), entropic_uncertainty_corpus(),
          eigenstate_lower_bound(),   free_expansion(),               second_law_monte_carlo(),
          piston_reset(),             speed_demon_boundary(),         scaling_invariance()};
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
        << fmt(r.seconds * 1e3) << " ms)\n";
  }
  out << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return all;
}

}  // namespace mdemon::acceptance
