#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdemon {

/// Which half of a box a partition leaves the molecule in.
enum class Side { Left, Right };

inline const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

inline Side parse_side(const std::string& s) {
  if (s == "left" || s == "L" || s == "l") return Side::Left;
  if (s == "right" || s == "R" || s == "r") return Side::Right;
  throw std::invalid_argument("unknown side '" + s + "' (expected left|right)");
}

/// A box must occupy at most this fraction of the grid extent.
inline constexpr double kMinBoxPadding = 8.0;

/**
 * Uniform 1-D sampling of [x_min, x_max) with n points; sample i sits at
 * x_min + i*dx. n must be a power of two.
 */
template <typename Scalar_>
class Grid {
 public:
  using Scalar = Scalar_;
  using RealArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  Grid(std::size_t n, Scalar x_min, Scalar x_max) : n_(n), x_min_(x_min), x_max_(x_max) {
    if (n < 2 || (n & (n - 1)) != 0)
      throw std::invalid_argument("grid size must be a power of two >= 2, got " + std::to_string(n));
    if (!(x_max > x_min) || !std::isfinite(double(x_min)) || !std::isfinite(double(x_max)))
      throw std::invalid_argument("grid requires finite x_max > x_min");
    dx_ = (x_max - x_min) / static_cast<Scalar>(n);
  }

  std::size_t size() const { return n_; }
  Eigen::Index rows() const { return static_cast<Eigen::Index>(n_); }
  Scalar x_min() const { return x_min_; }
  Scalar x_max() const { return x_max_; }
  Scalar dx() const { return dx_; }
  Scalar extent() const { return x_max_ - x_min_; }
  Scalar center() const { return (x_min_ + x_max_) / Scalar(2); }

  Scalar x(Eigen::Index i) const { return x_min_ + static_cast<Scalar>(i) * dx_; }

  RealArray coordinates() const {
    RealArray xs(rows());
    for (Eigen::Index i = 0; i < rows(); ++i) xs[i] = x(i);
    return xs;
  }

  // Momentum conjugate to x with hbar = 1: p_j = (j - n/2) * dp.
  Scalar dp() const { return Scalar(2 * EIGEN_PI) / (static_cast<Scalar>(n_) * dx_); }
  Scalar p_min() const { return -static_cast<Scalar>(n_ / 2) * dp(); }
  Scalar p(Eigen::Index j) const { return p_min() + static_cast<Scalar>(j) * dp(); }

  RealArray momenta() const {
    RealArray ps(rows());
    for (Eigen::Index j = 0; j < rows(); ++j) ps[j] = p(j);
    return ps;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_;
  }

 private:
  std::size_t n_;
  Scalar x_min_;
  Scalar x_max_;
  Scalar dx_;
};

template <typename Scalar>
Grid(std::size_t, Scalar, Scalar) -> Grid<Scalar>;

/// Container walls [a, b]; its length stands in for the container volume.
template <typename Scalar_>
struct BoxSpec {
  using Scalar = Scalar_;
  Scalar a;
  Scalar b;

  Scalar length() const { return b - a; }
  Scalar midpoint() const { return (a + b) / Scalar(2); }

  static BoxSpec centered(Scalar center, Scalar length) {
    return BoxSpec{center - length / Scalar(2), center + length / Scalar(2)};
  }
};

template <typename Scalar>
BoxSpec(Scalar, Scalar) -> BoxSpec<Scalar>;

/// Throws unless the box lies inside the grid and fills at most 1/8 of it.
template <typename Scalar>
void validate_box(const Grid<Scalar>& grid, const BoxSpec<Scalar>& box) {
  if (!(box.b > box.a)) throw std::invalid_argument("box requires b > a");
  if (box.a < grid.x_min() || box.b > grid.x_max())
    throw std::invalid_argument("box [" + std::to_string(double(box.a)) + ", " + std::to_string(double(box.b)) +
                                "] does not fit inside the grid");
  // Relative slack so that L = extent/8 exactly is accepted.
  if (box.length() * Scalar(kMinBoxPadding) > grid.extent() * (Scalar(1) + Scalar(1e-12)))
    throw std::invalid_argument("grid extent must be at least " + std::to_string(kMinBoxPadding) +
                                "x the box length");
}

}  // namespace mdemon
