#include "mdemon/demon.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace mdemon;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("szilard_cycle") {
  SUBCASE("ideal cost balances the extracted work") {
    const auto l = szilard_cycle(1.0, 1.0, kLog2);
    CHECK(l.delta_s_net == doctest::Approx(0.0));
    CHECK(l.w_extracted == doctest::Approx(kLog2));
    CHECK(l.q_reservoir == l.w_extracted);
    CHECK(l.delta_s_reservoir == doctest::Approx(-kLog2));
  }

  SUBCASE("a costlier measurement leaves net entropy production") {
    const double eigenstate_cost = 1.0733;
    const auto l = szilard_cycle(1.0, 1.0, eigenstate_cost);
    CHECK(l.delta_s_net == doctest::Approx(eigenstate_cost - kLog2));
    CHECK(l.delta_s_net > 0);
  }

  SUBCASE("temperature and k scale work, not entropy balance") {
    const auto l = szilard_cycle(300.0, 1.380649e-23, 1.380649e-23 * kLog2);
    CHECK(l.w_extracted == doctest::Approx(300.0 * 1.380649e-23 * kLog2));
    CHECK(std::abs(l.delta_s_net) < 1e-9 * 1.380649e-23);
  }

  SUBCASE("partial extraction") {
    const auto l = szilard_cycle(2.0, 1.0, kLog2, 0.5);
    CHECK(l.w_extracted == doctest::Approx(kLog2));
    CHECK(l.delta_s_net == doctest::Approx(kLog2 / 2));
  }

  CHECK_THROWS_AS(szilard_cycle(1.0, 1.0, 0.5 * kLog2), std::invalid_argument);
  CHECK_THROWS_AS(szilard_cycle(0.0, 1.0, kLog2), std::invalid_argument);
  CHECK_THROWS_AS(szilard_cycle(1.0, 1.0, kLog2, 1.5), std::invalid_argument);
}

TEST_CASE("property: second law holds for every valid ledger") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double k = std::pow(10.0, -23 + 23 * u(rng));
    const double temperature = 0.01 + 1000 * u(rng);
    const double excess = u(rng) < 0.1 ? 0.0 : 3 * u(rng);
    const auto l = szilard_cycle(temperature, k, k * (kLog2 + excess));
    CHECK(l.delta_s_net >= -1e-9 * k);
    CHECK(l.w_extracted == l.q_reservoir);
    if (excess == 0.0) CHECK(std::abs(l.delta_s_net) <= 1e-12 * k);
    else CHECK(l.delta_s_net > 0);
  }
}

TEST_CASE("free_expansion_entropy") {
  auto f = free_expansion_entropy(1, 2.0, 1.0, 1.0);
  CHECK(f.delta_s == doctest::Approx(kLog2));
  CHECK(f.q_equivalent == doctest::Approx(kLog2));

  f = free_expansion_entropy(100, 2.0, 1.0, 1.0);
  CHECK(f.delta_s == doctest::Approx(100 * kLog2));

  const double eps = 1e-9;
  CHECK(free_expansion_entropy(1, 1 + eps, 1.0, 1.0).delta_s == doctest::Approx(eps).epsilon(0.01));

  f = free_expansion_entropy(3, 2.0, 250.0, 2.0);
  CHECK(f.q_equivalent == doctest::Approx(250.0 * f.delta_s));

  CHECK_THROWS_AS(free_expansion_entropy(1, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(free_expansion_entropy(1, 0.5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(free_expansion_entropy(0, 2.0, 1.0, 1.0), std::invalid_argument);

  SUBCASE("additive in log ratio") {
    for (double r1 : {1.1, 2.0, 17.0})
      for (double r2 : {1.5, 2.0, 100.0})
        CHECK(std::abs(free_expansion_entropy(5, r1 * r2, 1.0, 1.0).delta_s -
                       free_expansion_entropy(5, r1, 1.0, 1.0).delta_s -
                       free_expansion_entropy(5, r2, 1.0, 1.0).delta_s) < 1e-12);
  }
}

TEST_CASE("boltzmann_delta_s") {
  CHECK(boltzmann_delta_s(1.0, 2.0, 1.0) == doctest::Approx(kLog2));
  CHECK(boltzmann_delta_s(3.0, 3.0, 1.0) == 0.0);
  CHECK(boltzmann_delta_s(2.0, 1.0, 1.0) == doctest::Approx(-kLog2));
  CHECK_THROWS_AS(boltzmann_delta_s(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(boltzmann_delta_s(1.0, -1.0, 1.0), std::invalid_argument);

  SUBCASE("chains telescope") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
      const double o1 = std::exp(u(rng)), o2 = std::exp(u(rng)), o3 = std::exp(u(rng));
      CHECK(std::abs(boltzmann_delta_s(o1, o2, 1.0) + boltzmann_delta_s(o2, o3, 1.0) -
                     boltzmann_delta_s(o1, o3, 1.0)) < 1e-12);
    }
  }
}

TEST_CASE("norton_reset") {
  const auto from_r = norton_reset(Cell::R);
  CHECK(from_r.trace.size() == 1);
  CHECK(from_r.final.memory == Cell::R);
  CHECK(from_r.final.volume() == 1);
  CHECK(from_r.trace.front() == from_r.final);

  const auto from_l = norton_reset(Cell::L);
  CHECK(from_l.trace.front().memory == Cell::L);
  CHECK(from_l.trace.front().volume() == 1);
  CHECK(from_l.final.memory == Cell::R);
  CHECK(from_l.final.occupied_cells == std::set<Cell>{Cell::R});
  CHECK(from_l.final.volume() == 1);

  // Both inputs end in the same state: the map is not injective, yet no trajectory is compressed.
  CHECK(from_l.final == from_r.final);

  SUBCASE("idempotent") {
    for (Cell c : {Cell::L, Cell::R}) {
      const auto once = norton_reset(c).final;
      CHECK(norton_reset(once.memory).final == once);
    }
  }

  CHECK(parse_cell("left") == Cell::L);
  CHECK_THROWS_AS(parse_cell("middle"), std::invalid_argument);
}

TEST_CASE("speed_demon_feasibility") {
  auto a = speed_demon_feasibility(1.0, 1.0);
  CHECK(a.sigma_x_induced == 0.5);
  CHECK(a.feasible);

  a = speed_demon_feasibility(0.01, 1.0);
  CHECK(a.sigma_x_induced == doctest::Approx(50.0));
  CHECK_FALSE(a.feasible);

  a = speed_demon_feasibility(1e12, 1.0);
  CHECK(a.feasible);
  CHECK(a.sigma_x_induced * a.delta_p == doctest::Approx(0.5));

  CHECK_THROWS_AS(speed_demon_feasibility(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(speed_demon_feasibility(1.0, -1.0), std::invalid_argument);

  SUBCASE("flip sits at hbar / (2 door)") {
    for (double door : {0.1, 0.7, 1.0, 9.0}) {
      const double threshold = 1.0 / (2 * door);
      CHECK(speed_demon_feasibility(threshold, door).feasible);
      CHECK_FALSE(speed_demon_feasibility(std::nextafter(threshold, 0.0), door).feasible);
    }
  }

  SUBCASE("feasible agrees with sigma_x <= door away from the boundary") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
      const double dp = std::pow(10.0, u(rng)), door = std::pow(10.0, u(rng));
      const auto r = speed_demon_feasibility(dp, door);
      if (std::abs(r.sigma_x_induced / door - 1) > 1e-12) CHECK(r.feasible == (r.sigma_x_induced <= door));
    }
  }
}

TEST_CASE("monte_carlo_cycles") {
  SUBCASE("constant sampler") {
    const auto m = monte_carlo_cycles(1000, 1.0, 1.0, constant_cost_sampler(1.0), 1);
    CHECK(m.mean_delta_s_net == doctest::Approx(0.0));
    CHECK(std::abs(m.min_delta_s_net) < 1e-15);
    CHECK(m.total_work == doctest::Approx(1000 * kLog2));
    CHECK(m.cycles.size() == 1000);
  }

  SUBCASE("noisy sampler stays above the bound") {
    const auto m = monte_carlo_cycles(5000, 2.0, 1.0, exponential_excess_sampler(1.0, 0.3), 77);
    CHECK(m.min_delta_s_net >= 0.0);
    CHECK(m.mean_delta_s_net == doctest::Approx(0.3).epsilon(0.05));
    CHECK(m.mean_work == doctest::Approx(2.0 * kLog2));
    for (std::size_t i = 0; i < m.cycles.size(); ++i) CHECK(m.cycles[i].cycle == i);
  }

  SUBCASE("deterministic in the seed, sensitive to it") {
    const auto s = exponential_excess_sampler(1.0, 0.3);
    const auto a = monte_carlo_cycles(2000, 1.0, 1.0, s, 42);
    const auto b = monte_carlo_cycles(2000, 1.0, 1.0, s, 42);
    const auto c = monte_carlo_cycles(2000, 1.0, 1.0, s, 43);
    CHECK(a.mean_delta_s_net == b.mean_delta_s_net);
    CHECK(a.min_delta_s_net == b.min_delta_s_net);
    for (std::size_t i = 0; i < a.cycles.size(); ++i) CHECK(a.cycles[i].measurement_cost == b.cycles[i].measurement_cost);
    CHECK(a.mean_delta_s_net != c.mean_delta_s_net);
  }

  SUBCASE("samplers below the bound propagate the cycle error") {
    const CostSampler cheap = [](CycleRng&) { return 0.1; };
    CHECK_THROWS_AS(monte_carlo_cycles(10, 1.0, 1.0, cheap, 1), std::invalid_argument);
  }

  CHECK_THROWS_AS(monte_carlo_cycles(0, 1.0, 1.0, constant_cost_sampler(1.0), 1), std::invalid_argument);
}

TEST_CASE("CycleRng uniform draws") {
  CycleRng rng(123, 0);
  double sum = 0, lo = 1, hi = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(CycleRng(1, 0).next() != CycleRng(1, 1).next());
  CHECK(CycleRng(1, 5).next() == CycleRng(1, 5).next());
}
