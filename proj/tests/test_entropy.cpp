#include "mdemon/entropy.hpp"
#include "mdemon/state.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace mdemon;

namespace {

Grid<double> default_grid() { return Grid<double>(4096, -8.0, 8.0); }

const double kLnPiE = std::log(M_PI * std::exp(1.0));

std::vector<StateSpec<double>> eur_corpus() {
  std::vector<StateSpec<double>> corpus;
  for (double sigma : {0.2, 0.5, 1.0, 1.3}) corpus.push_back(GaussianState<double>{0.0, sigma, 0.0});
  for (double p0 : {-6.0, 1.0, 4.0}) corpus.push_back(GaussianState<double>{0.4, 0.6, p0});
  for (int n = 1; n <= 8; ++n) corpus.push_back(BoxEigenstate<double>{{-1.0, 1.0}, n});
  for (Side side : {Side::Left, Side::Right})
    for (double sigma : {0.2, 1.0 / 3.0}) corpus.push_back(TruncatedGaussian<double>{0.0, sigma, 2.0, side});
  return corpus;
}

}  // namespace

TEST_CASE("differential_entropy examples") {
  const auto g = default_grid();
  CHECK(differential_entropy(make_gaussian(g, 0.0, 1.0).density()) == doctest::Approx(1.41894).epsilon(1e-3));

  const int n = 2000;
  const Density<double> uniform(Eigen::ArrayXd::Constant(n, 0.5), 2.0 / n);
  CHECK(differential_entropy(uniform) == doctest::Approx(std::log(2.0)).epsilon(1e-3));

  SUBCASE("box ground state matches quadrature at 10x resolution") {
    const double expected = oracle::eigenstate_position_entropy(2.0, 1, 10 * 512);
    // ln(2L) - 1 in closed form.
    CHECK(expected == doctest::Approx(std::log(4.0) - 1).epsilon(1e-10));
    const double h = differential_entropy(make_box_eigenstate(g, BoxSpec<double>{-1.0, 1.0}, 1).density());
    CHECK(std::abs(h - expected) < 1e-4);
  }

  SUBCASE("empty cells contribute nothing") {
    Eigen::ArrayXd v = Eigen::ArrayXd::Zero(8);
    v.head(4).setConstant(0.25);
    CHECK(differential_entropy(Density<double>(v, 1.0)) == doctest::Approx(std::log(4.0)));
    v.tail(4).setConstant(1e-320);
    CHECK(differential_entropy(Density<double>(v, 1.0)) == doctest::Approx(std::log(4.0)));
  }
}

TEST_CASE("gaussian_entropy closed form") {
  CHECK(gaussian_entropy(1.0) == doctest::Approx(0.5 * std::log(2 * M_PI * std::exp(1.0))));
  CHECK(gaussian_entropy(1.0) == doctest::Approx(1.41894).epsilon(1e-5));
  CHECK(std::abs(gaussian_entropy(1.0 / std::sqrt(2 * M_PI * std::exp(1.0)))) < 1e-15);
  CHECK(gaussian_entropy(2.0, 3.0) == doctest::Approx(3.0 * gaussian_entropy(2.0)));

  // Halving sigma^2 twice: S(s^2) - S(s^2/4) = (1/2) ln 4 = ln 2.
  for (double sigma : {0.01, 1.0, 37.0})
    CHECK(gaussian_entropy(sigma) - gaussian_entropy(sigma / 2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(gaussian_entropy(0.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_entropy(-1.0), std::invalid_argument);
}

TEST_CASE("eur_report") {
  const auto g = default_grid();

  SUBCASE("minimum-uncertainty Gaussian reaches ln(pi e)") {
    const auto r = eur_report(make_gaussian(g, 0.0, 0.8));
    CHECK(std::abs(r.eur_sum - kLnPiE) < 2e-3);
    CHECK(r.eur_bound == doctest::Approx(0.30685).epsilon(1e-5));
    CHECK(r.satisfies_eur);
    CHECK(r.eur_sum == r.h_x + r.h_p);
    CHECK(r.thermo_s == r.h_p);
  }

  SUBCASE("thermodynamic entropy scales with k") {
    const auto r = eur_report(make_gaussian(g, 0.0, 0.8), eur_bound_leipnik(), 1.380649e-23);
    CHECK(r.thermo_s == doctest::Approx(1.380649e-23 * r.h_p));
  }

  SUBCASE("box ground state, checked against independent quadrature of both entropies") {
    const auto r = eur_report(make_box_eigenstate(g, BoxSpec<double>{-1.0, 1.0}, 1));
    const double hx = oracle::eigenstate_position_entropy(2.0, 1, 5120);
    const double hp =
        oracle::segment_momentum_entropy({1.0, M_PI / 2, 2.0}, 2 * M_PI / 16 / 10, 2000.0).entropy;
    CHECK(std::abs(r.h_x - hx) < 1e-4);
    CHECK(std::abs(r.h_p - hp) < 1e-3);
    CHECK(r.eur_sum >= kLnPiE - 0.01);
    CHECK(hx + hp >= kLnPiE);
  }

  SUBCASE("satisfies_eur is the bound comparison with 1e-9 slack") {
    const auto wf = make_gaussian(g, 0.0, 0.8);
    const double sum = eur_report(wf).eur_sum;
    CHECK(eur_report(wf, sum + 0.5e-9).satisfies_eur);
    CHECK_FALSE(eur_report(wf, sum + 2e-9).satisfies_eur);
    CHECK_FALSE(eur_report(wf, 3.0).satisfies_eur);
  }
}

TEST_CASE("property: entropic uncertainty over the corpus") {
  const auto g = default_grid();
  for (const auto& spec : eur_corpus()) {
    CAPTURE(describe(spec));
    const auto r = eur_report(sample(spec, g));
    CHECK(r.satisfies_eur);
    CHECK(r.eur_sum >= eur_bound_leipnik());
    CHECK(r.eur_sum >= eur_bound_sharp() - 0.01);
  }
}

TEST_CASE("property: dilation shifts entropies by +-ln a") {
  // The cut of a truncated state is resolved to O(dx), so it gets a finer grid.
  const std::vector<std::pair<StateSpec<double>, std::size_t>> states = {
      {GaussianState<double>{0.0, 0.5, 1.0}, 8192},
      {BoxEigenstate<double>{{-1.0, 1.0}, 2}, 8192},
      {TruncatedGaussian<double>{0.0, 1.0 / 3.0, 2.0, Side::Left}, 16384}};
  for (const auto& [s, n] : states) {
    CAPTURE(describe(s));
    const Grid<double> g(n, -16.0, 16.0);
    const auto base = eur_report(sample(s, g));
    for (double a : {0.5, 2.0}) {
      const auto scaled = eur_report(sample(dilated(s, a), g));
      CHECK(std::abs(scaled.h_x - base.h_x - std::log(a)) < 2e-3);
      CHECK(std::abs(scaled.h_p - base.h_p + std::log(a)) < 2e-3);
      CHECK(std::abs(scaled.eur_sum - base.eur_sum) < 4e-3);
    }
  }
}

TEST_CASE("property: entropies of smooth states converge under grid refinement") {
  const std::vector<StateSpec<double>> states = {GaussianState<double>{0.0, 1.0, 0.0},
                                                 GaussianState<double>{0.3, 0.4, 2.5},
                                                 GaussianState<double>{-0.5, 0.15, -5.0}};
  for (const auto& s : states) {
    CAPTURE(describe(s));
    const auto coarse = eur_report(sample(s, Grid<double>(4096, -8.0, 8.0)));
    const auto fine = eur_report(sample(s, Grid<double>(8192, -8.0, 8.0)));
    CHECK(std::abs(coarse.h_x - fine.h_x) < 1e-4);
    CHECK(std::abs(coarse.h_p - fine.h_p) < 1e-4);
  }
}

TEST_CASE("property: grid Gaussian entropy equals the closed form for sigma in [0.1, 4]") {
  const Grid<double> g(4096, -32.0, 32.0);
  for (double sigma = 0.1; sigma <= 4.0; sigma *= 1.25) {
    CAPTURE(sigma);
    CHECK(std::abs(differential_entropy(make_gaussian(g, 0.0, sigma).density()) - gaussian_entropy(sigma)) < 1e-3);
  }
}
