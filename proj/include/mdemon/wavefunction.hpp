#pragma once

#include "mdemon/grid.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace mdemon {

/// Thrown when a requested measurement outcome has zero probability.
class ImpossibleOutcome : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kWaveNormTolerance = 1e-10;
inline constexpr double kDensityNormTolerance = 1e-8;

/**
 * A sampled probability density on a uniform axis starting at `origin`.
 * Values are nonnegative and integrate to one with the Riemann rule.
 */
template <typename Scalar_>
class Density {
 public:
  using Scalar = Scalar_;
  using RealArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  Density(RealArray values, Scalar spacing, Scalar origin = Scalar(0))
      : values_(std::move(values)), spacing_(spacing), origin_(origin) {
    if (!(spacing_ > 0)) throw std::invalid_argument("density spacing must be positive");
    if (values_.size() == 0) throw std::invalid_argument("density must have at least one sample");
    if ((values_ < Scalar(0)).any()) throw std::invalid_argument("density values must be nonnegative");
    const Scalar mass = values_.sum() * spacing_;
    if (std::abs(double(mass) - 1.0) > kDensityNormTolerance)
      throw std::invalid_argument("density is not normalized (mass " + std::to_string(double(mass)) + ")");
  }

  const RealArray& values() const { return values_; }
  Scalar spacing() const { return spacing_; }
  Scalar origin() const { return origin_; }
  Eigen::Index size() const { return values_.size(); }
  Scalar coordinate(Eigen::Index i) const { return origin_ + static_cast<Scalar>(i) * spacing_; }

  RealArray coordinates() const {
    RealArray u(size());
    for (Eigen::Index i = 0; i < size(); ++i) u[i] = coordinate(i);
    return u;
  }

 private:
  RealArray values_;
  Scalar spacing_;
  Scalar origin_;
};

template <typename Scalar>
Scalar mean(const Density<Scalar>& d) {
  return (d.coordinates() * d.values()).sum() * d.spacing();
}

template <typename Scalar>
Scalar variance(const Density<Scalar>& d) {
  const Scalar mu = mean(d);
  return ((d.coordinates() - mu).square() * d.values()).sum() * d.spacing();
}

/// Normalized complex amplitudes psi(x_i) on a Grid.
template <typename Scalar_>
class WaveFunction {
 public:
  using Scalar = Scalar_;
  using Complex = std::complex<Scalar>;
  using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  WaveFunction(Grid<Scalar> grid, ComplexVector amplitudes)
      : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != grid_.rows()) throw std::invalid_argument("amplitude count does not match grid");
    const Scalar norm = amplitudes_.squaredNorm() * grid_.dx();
    if (std::abs(double(norm) - 1.0) > kWaveNormTolerance)
      throw std::invalid_argument("wavefunction is not normalized (norm " + std::to_string(double(norm)) + ")");
  }

  /// Rescales arbitrary amplitudes to unit norm.
  static WaveFunction normalized(Grid<Scalar> grid, ComplexVector amplitudes) {
    const Scalar norm2 = amplitudes.squaredNorm() * grid.dx();
    if (!(norm2 > 0) || !std::isfinite(double(norm2)))
      throw std::invalid_argument("cannot normalize a zero or non-finite state");
    amplitudes /= std::sqrt(norm2);
    return WaveFunction(std::move(grid), std::move(amplitudes));
  }

  const Grid<Scalar>& grid() const { return grid_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  Density<Scalar> density() const {
    return Density<Scalar>(amplitudes_.cwiseAbs2().array(), grid_.dx(), grid_.x_min());
  }

 private:
  Grid<Scalar> grid_;
  ComplexVector amplitudes_;
};

/// phi(p_j) on the symmetric momentum grid p_j = (j - n/2) dp, hbar = 1.
template <typename Scalar_>
class MomentumAmplitudes {
 public:
  using Scalar = Scalar_;
  using Complex = std::complex<Scalar>;
  using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  MomentumAmplitudes(Grid<Scalar> grid, ComplexVector amplitudes)
      : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != grid_.rows()) throw std::invalid_argument("amplitude count does not match grid");
    const Scalar norm = amplitudes_.squaredNorm() * grid_.dp();
    if (std::abs(double(norm) - 1.0) > kDensityNormTolerance)
      throw std::invalid_argument("momentum amplitudes violate Parseval (norm " + std::to_string(double(norm)) + ")");
  }

  const Grid<Scalar>& position_grid() const { return grid_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Scalar dp() const { return grid_.dp(); }
  Scalar p(Eigen::Index j) const { return grid_.p(j); }

  Density<Scalar> density() const {
    return Density<Scalar>(amplitudes_.cwiseAbs2().array(), grid_.dp(), grid_.p_min());
  }

 private:
  Grid<Scalar> grid_;
  ComplexVector amplitudes_;
};

namespace detail {

// (-1)^i, which moves the zero-momentum bin to index n/2.
template <typename Scalar>
Scalar alternating_sign(Eigen::Index i) {
  return (i & 1) ? Scalar(-1) : Scalar(1);
}

}  // namespace detail

/**
 * Unitary position -> momentum transform,
 *   phi(p_j) = (2 pi)^{-1/2} sum_i psi(x_i) exp(-i p_j x_i) dx,
 * evaluated with an FFT of the sign-alternated samples.
 */
template <typename Scalar>
MomentumAmplitudes<Scalar> to_momentum(const WaveFunction<Scalar>& wf) {
  using ComplexVector = typename WaveFunction<Scalar>::ComplexVector;
  const auto& grid = wf.grid();
  const Eigen::Index n = grid.rows();

  ComplexVector shifted(n);
  for (Eigen::Index i = 0; i < n; ++i) shifted[i] = wf[i] * detail::alternating_sign<Scalar>(i);

  ComplexVector spectrum(n);
  Eigen::FFT<Scalar> fft;
  fft.fwd(spectrum, shifted);

  const Scalar scale = grid.dx() / std::sqrt(Scalar(2 * EIGEN_PI));
  for (Eigen::Index j = 0; j < n; ++j)
    spectrum[j] *= scale * std::polar(Scalar(1), -grid.p(j) * grid.x_min());
  return MomentumAmplitudes<Scalar>(grid, std::move(spectrum));
}

/// Inverse of to_momentum.
template <typename Scalar>
WaveFunction<Scalar> to_position(const MomentumAmplitudes<Scalar>& phi) {
  using ComplexVector = typename WaveFunction<Scalar>::ComplexVector;
  const auto& grid = phi.position_grid();
  const Eigen::Index n = grid.rows();

  ComplexVector phased(n);
  for (Eigen::Index j = 0; j < n; ++j)
    phased[j] = phi.amplitudes()[j] * std::polar(Scalar(1), grid.p(j) * grid.x_min());

  ComplexVector psi(n);
  Eigen::FFT<Scalar> fft;
  fft.inv(psi, phased);  // includes 1/n

  const Scalar scale = static_cast<Scalar>(n) * grid.dp() / std::sqrt(Scalar(2 * EIGEN_PI));
  for (Eigen::Index i = 0; i < n; ++i) psi[i] *= scale * detail::alternating_sign<Scalar>(i);
  // Round-off may exceed the 1e-10 construction tolerance only for pathological inputs.
  return WaveFunction<Scalar>::normalized(grid, std::move(psi));
}

/**
 * Estimated probability beyond the momentum grid, assuming the 1/p^2 tail of
 * a state with a jump discontinuity. The mass in the outermost decade
 * |p| in [p_max/10, p_max] is 9x the mass beyond p_max under that law.
 */
template <typename Scalar>
Scalar momentum_tail_mass(const MomentumAmplitudes<Scalar>& phi) {
  const Scalar p_max = -phi.position_grid().p_min();
  Scalar decade = 0;
  for (Eigen::Index j = 0; j < phi.amplitudes().size(); ++j)
    if (std::abs(phi.p(j)) >= p_max / Scalar(10)) decade += std::norm(phi.amplitudes()[j]);
  return decade * phi.dp() / Scalar(9);
}

/// Minimum-uncertainty Gaussian with optional mean momentum p0 (phase e^{i p0 x}).
template <typename Scalar>
WaveFunction<Scalar> make_gaussian(const Grid<Scalar>& grid, Scalar center, Scalar sigma_x, Scalar p0 = Scalar(0)) {
  if (!(sigma_x > 0)) throw std::invalid_argument("gaussian width must be positive");
  if (center - 6 * sigma_x < grid.x_min() || center + 6 * sigma_x > grid.x_max())
    throw std::invalid_argument("gaussian +-6 sigma window exceeds the grid");
  typename WaveFunction<Scalar>::ComplexVector amps(grid.rows());
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    const Scalar u = grid.x(i) - center;
    amps[i] = std::polar(std::exp(-u * u / (4 * sigma_x * sigma_x)), p0 * grid.x(i));
  }
  return WaveFunction<Scalar>::normalized(grid, std::move(amps));
}

/// Particle-in-a-box eigenstate sqrt(2/L) sin(n pi (x - a)/L) on [a, b], zero outside.
template <typename Scalar>
WaveFunction<Scalar> make_box_eigenstate(const Grid<Scalar>& grid, const BoxSpec<Scalar>& box, int quantum_number) {
  if (quantum_number < 1) throw std::invalid_argument("box quantum number must be >= 1");
  validate_box(grid, box);
  const Scalar length = box.length();
  const Scalar amplitude = std::sqrt(Scalar(2) / length);
  const Scalar k = Scalar(quantum_number) * Scalar(EIGEN_PI) / length;
  typename WaveFunction<Scalar>::ComplexVector amps = WaveFunction<Scalar>::ComplexVector::Zero(grid.rows());
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    const Scalar x = grid.x(i);
    if (x >= box.a && x <= box.b) amps[i] = amplitude * std::sin(k * (x - box.a));
  }
  return WaveFunction<Scalar>::normalized(grid, std::move(amps));
}

namespace detail {

// Weight of sample x in the chosen half: 1 inside, 1/2 on the dividing line, 0 outside.
template <typename Scalar>
Scalar half_weight(Scalar x, const BoxSpec<Scalar>& box, Side side, Scalar dx) {
  const Scalar mid = box.midpoint();
  if (std::abs(x - mid) < dx * Scalar(1e-6)) return Scalar(0.5);
  return (side == Side::Left) == (x < mid) ? Scalar(1) : Scalar(0);
}

}  // namespace detail

/// Probability of finding the molecule inside [a, b].
template <typename Scalar>
Scalar box_mass(const WaveFunction<Scalar>& wf, const BoxSpec<Scalar>& box) {
  Scalar mass = 0;
  for (Eigen::Index i = 0; i < wf.grid().rows(); ++i) {
    const Scalar x = wf.grid().x(i);
    if (x >= box.a && x <= box.b) mass += std::norm(wf[i]);
  }
  return mass * wf.grid().dx();
}

/**
 * Probability that the partition finds the molecule in the chosen half, given
 * that it is in the box. A sample on the dividing line counts half to each side.
 */
template <typename Scalar>
Scalar side_probability(const WaveFunction<Scalar>& wf, const BoxSpec<Scalar>& box, Side side) {
  const Scalar dx = wf.grid().dx();
  Scalar mass = 0;
  for (Eigen::Index i = 0; i < wf.grid().rows(); ++i) {
    const Scalar x = wf.grid().x(i);
    if (x < box.a || x > box.b) continue;
    mass += detail::half_weight(x, box, side, dx) * std::norm(wf[i]);
  }
  return mass * dx / box_mass(wf, box);
}

/**
 * Partition insertion as a projective position measurement: keeps the chosen
 * half of the box and renormalizes. A sample exactly on the partition is
 * dropped from both halves, so left and right outcomes are mirror images.
 */
template <typename Scalar>
WaveFunction<Scalar> project_half(const WaveFunction<Scalar>& wf, const BoxSpec<Scalar>& box, Side side) {
  validate_box(wf.grid(), box);
  if (box_mass(wf, box) < Scalar(0.99))
    throw std::invalid_argument("state is not confined to the box (mass inside < 0.99)");
  if (side_probability(wf, box, side) <= Scalar(1e-6))
    throw ImpossibleOutcome(std::string("no probability on the ") + to_string(side) + " side");

  const auto& grid = wf.grid();
  typename WaveFunction<Scalar>::ComplexVector amps = WaveFunction<Scalar>::ComplexVector::Zero(grid.rows());
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    const Scalar x = grid.x(i);
    if (x < box.a || x > box.b) continue;
    if (detail::half_weight(x, box, side, grid.dx()) == Scalar(1)) amps[i] = wf[i];
  }
  return WaveFunction<Scalar>::normalized(grid, std::move(amps));
}

template <typename Scalar>
Scalar position_variance(const WaveFunction<Scalar>& wf) {
  return variance(wf.density());
}

template <typename Scalar>
Scalar momentum_variance(const WaveFunction<Scalar>& wf) {
  return variance(to_momentum(wf).density());
}

}  // namespace mdemon
