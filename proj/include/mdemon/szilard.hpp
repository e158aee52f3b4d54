#pragma once

#include "mdemon/entropy.hpp"
#include "mdemon/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace mdemon {

// Partition insertion in the one-molecule engine. Two models are kept apart:
// the variance-scaling Gaussian bookkeeping, and literal projection of a
// sampled wavefunction onto one half of the box.

enum class PartitionModel { AnalyticGaussian, NumericProjection };

inline const char* to_string(PartitionModel m) {
  return m == PartitionModel::AnalyticGaussian ? "analytic-gaussian" : "numeric-projection";
}

template <typename Scalar_>
struct PartitionEvent {
  using Scalar = Scalar_;
  PartitionModel model = PartitionModel::AnalyticGaussian;
  std::optional<Side> side;  ///< empty: outcome not yet resolved (analytic model)
  Scalar s_before = 0;
  Scalar s_after = 0;
  Scalar delta_s = 0;
  Scalar sigma_x_before = 0;
  Scalar sigma_x_after = 0;
  Scalar sigma_p_before = 0;
  Scalar sigma_p_after = 0;
  Scalar momentum_tail_mass = 0;  ///< estimated probability beyond the momentum grid (numeric model)
};

inline constexpr double kNumericLowerBoundTolerance = 0.02;

/// -k ln a, the least entropy increase when the position width shrinks by a factor a.
template <typename Scalar>
Scalar analytic_localization_cost(Scalar a, Scalar k = Scalar(1)) {
  if (!(a > 0) || a > Scalar(1)) throw std::invalid_argument("localization factor must lie in (0, 1]");
  return -k * std::log(a);
}

/**
 * Halving the position width of a minimum-uncertainty Gaussian of initial
 * width L. Momentum widths follow from sigma_p = hbar / (2 sigma_x), and the
 * entropies are the Gaussian closed form applied to sigma_p.
 */
template <typename Scalar>
PartitionEvent<Scalar> analytic_partition_event(Scalar length, Scalar k = Scalar(1), Scalar hbar = Scalar(1)) {
  if (!(length > 0)) throw std::invalid_argument("box length must be positive");
  if (!(hbar > 0)) throw std::invalid_argument("hbar must be positive");
  PartitionEvent<Scalar> e;
  e.model = PartitionModel::AnalyticGaussian;
  e.sigma_x_before = length;
  e.sigma_x_after = length / Scalar(2);
  e.sigma_p_before = hbar / (Scalar(2) * e.sigma_x_before);
  e.sigma_p_after = hbar / (Scalar(2) * e.sigma_x_after);
  e.s_before = gaussian_entropy(e.sigma_p_before, k);
  e.s_after = gaussian_entropy(e.sigma_p_after, k);
  e.delta_s = e.s_after - e.s_before;
  return e;
}

template <typename Scalar>
PartitionEvent<Scalar> numeric_partition_event(const WaveFunction<Scalar>& wf, const BoxSpec<Scalar>& box, Side side,
                                               Scalar k = Scalar(1)) {
  const WaveFunction<Scalar> after = project_half(wf, box, side);
  const auto phi_before = to_momentum(wf);
  const auto phi_after = to_momentum(after);
  const auto rho_before = phi_before.density();
  const auto rho_after = phi_after.density();

  PartitionEvent<Scalar> e;
  e.model = PartitionModel::NumericProjection;
  e.side = side;
  e.s_before = k * differential_entropy(rho_before);
  e.s_after = k * differential_entropy(rho_after);
  e.delta_s = e.s_after - e.s_before;
  e.sigma_x_before = std::sqrt(position_variance(wf));
  e.sigma_x_after = std::sqrt(position_variance(after));
  e.sigma_p_before = std::sqrt(variance(rho_before));
  e.sigma_p_after = std::sqrt(variance(rho_after));
  e.momentum_tail_mass = momentum_tail_mass(phi_after);
  return e;
}

/**
 * Refits the position widths of a numeric event to minimum-uncertainty
 * Gaussians, samples those on `grid` and returns their momentum-entropy
 * difference. Ideally equals -k ln(sigma_x_after / sigma_x_before).
 */
template <typename Scalar>
Scalar refit_gaussian_delta_s(const PartitionEvent<Scalar>& event, const Grid<Scalar>& grid, Scalar k = Scalar(1)) {
  const Scalar c = grid.center();
  const auto before = make_gaussian(grid, c, event.sigma_x_before);
  const auto after = make_gaussian(grid, c, event.sigma_x_after);
  return thermodynamic_entropy(after, k) - thermodynamic_entropy(before, k);
}

template <typename Scalar_>
struct GaussianEigenstateComparison {
  using Scalar = Scalar_;
  Scalar delta_s_gaussian_analytic = 0;
  Scalar delta_s_eigenstate_numeric = 0;
  bool lower_bound_respected = false;
};

/// Analytic Gaussian cost vs. projection of the box ground state centered on the grid.
template <typename Scalar>
GaussianEigenstateComparison<Scalar> gaussian_vs_eigenstate(Scalar length, const Grid<Scalar>& grid,
                                                            Scalar k = Scalar(1), Side side = Side::Left) {
  const auto box = BoxSpec<Scalar>::centered(grid.center(), length);
  validate_box(grid, box);
  GaussianEigenstateComparison<Scalar> r;
  r.delta_s_gaussian_analytic = analytic_partition_event(length, k).delta_s;
  r.delta_s_eigenstate_numeric = numeric_partition_event(make_box_eigenstate(grid, box, 1), box, side, k).delta_s;
  r.lower_bound_respected = r.delta_s_eigenstate_numeric >=
                            k * Scalar(std::log(2.0)) - k * Scalar(kNumericLowerBoundTolerance);
  return r;
}

}  // namespace mdemon
