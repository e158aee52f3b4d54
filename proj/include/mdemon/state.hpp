#pragma once

#include "mdemon/wavefunction.hpp"

#include <string>
#include <variant>

namespace mdemon {

// Analytic descriptions of the test states. Each can be sampled onto a grid
// and dilated about its own center, x - c -> a (x - c).

template <typename Scalar>
struct GaussianState {
  Scalar center = 0;
  Scalar sigma = 1;
  Scalar p0 = 0;
};

template <typename Scalar>
struct BoxEigenstate {
  BoxSpec<Scalar> box{-1, 1};
  int quantum_number = 1;
};

/// Gaussian centered in a box of length `box_length`, cut to one half.
template <typename Scalar>
struct TruncatedGaussian {
  Scalar center = 0;
  Scalar sigma = 1;
  Scalar box_length = 6;
  Side side = Side::Left;

  BoxSpec<Scalar> box() const { return BoxSpec<Scalar>::centered(center, box_length); }
};

template <typename Scalar>
using StateSpec = std::variant<GaussianState<Scalar>, BoxEigenstate<Scalar>, TruncatedGaussian<Scalar>>;

template <typename Scalar>
WaveFunction<Scalar> sample(const StateSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  struct Visitor {
    const Grid<Scalar>& grid;
    WaveFunction<Scalar> operator()(const GaussianState<Scalar>& s) const {
      return make_gaussian(grid, s.center, s.sigma, s.p0);
    }
    WaveFunction<Scalar> operator()(const BoxEigenstate<Scalar>& s) const {
      return make_box_eigenstate(grid, s.box, s.quantum_number);
    }
    WaveFunction<Scalar> operator()(const TruncatedGaussian<Scalar>& s) const {
      return project_half(make_gaussian(grid, s.center, s.sigma), s.box(), s.side);
    }
  };
  return std::visit(Visitor{grid}, spec);
}

/// The state stretched by `a` about its center; position widths scale by a, momenta by 1/a.
template <typename Scalar>
StateSpec<Scalar> dilated(const StateSpec<Scalar>& spec, Scalar a) {
  if (!(a > 0)) throw std::invalid_argument("dilation factor must be positive");
  struct Visitor {
    Scalar a;
    StateSpec<Scalar> operator()(GaussianState<Scalar> s) const {
      s.sigma *= a;
      s.p0 /= a;
      return s;
    }
    StateSpec<Scalar> operator()(BoxEigenstate<Scalar> s) const {
      s.box = BoxSpec<Scalar>::centered(s.box.midpoint(), s.box.length() * a);
      return s;
    }
    StateSpec<Scalar> operator()(TruncatedGaussian<Scalar> s) const {
      s.sigma *= a;
      s.box_length *= a;
      return s;
    }
  };
  return std::visit(Visitor{a}, spec);
}

template <typename Scalar>
std::string describe(const StateSpec<Scalar>& spec) {
  struct Visitor {
    std::string operator()(const GaussianState<Scalar>& s) const {
      return "gaussian(sigma=" + std::to_string(double(s.sigma)) + ", p0=" + std::to_string(double(s.p0)) + ")";
    }
    std::string operator()(const BoxEigenstate<Scalar>& s) const {
      return "eigenstate(L=" + std::to_string(double(s.box.length())) + ", n=" + std::to_string(s.quantum_number) + ")";
    }
    std::string operator()(const TruncatedGaussian<Scalar>& s) const {
      return "truncated-gaussian(sigma=" + std::to_string(double(s.sigma)) + ", side=" + to_string(s.side) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace mdemon
