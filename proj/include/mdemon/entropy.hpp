#pragma once

#include "mdemon/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace mdemon {

/// ln(e/2): the position-momentum entropy bound as quoted from Leipnik.
template <typename Scalar = double>
constexpr Scalar eur_bound_leipnik() {
  return Scalar(1) - Scalar(0.693147180559945309417232121458176568L);
}

/// ln(pi e): the sharp Hirschman-Beckner bound, saturated by Gaussians.
template <typename Scalar = double>
constexpr Scalar eur_bound_sharp() {
  return Scalar(1) + Scalar(1.144729885849400174143427351353058712L);
}

// Cells below this are treated as exact zeros (0 ln 0 = 0).
inline constexpr double kEntropyZeroCutoff = 1e-300;

/// Plug-in differential entropy -sum rho ln(rho) du, in nats.
template <typename Scalar>
Scalar differential_entropy(const Density<Scalar>& d) {
  Scalar h = 0;
  for (const Scalar v : d.values())
    if (v > Scalar(kEntropyZeroCutoff)) h -= v * std::log(v);
  return h * d.spacing();
}

/// Entropy of a normal distribution of width sigma, (k/2) ln(2 pi e sigma^2).
template <typename Scalar>
Scalar gaussian_entropy(Scalar sigma, Scalar k = Scalar(1)) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian entropy requires sigma > 0");
  return k / Scalar(2) * std::log(Scalar(2 * EIGEN_PI) * sigma * sigma * std::exp(Scalar(1)));
}

template <typename Scalar_>
struct EntropyReport {
  using Scalar = Scalar_;
  Scalar h_x = 0;        ///< position entropy [nats]
  Scalar h_p = 0;        ///< momentum entropy [nats]
  Scalar eur_sum = 0;    ///< h_x + h_p
  Scalar eur_bound = 0;  ///< bound checked against
  Scalar thermo_s = 0;   ///< k * h_p
  bool satisfies_eur = false;
};

inline constexpr double kEurSlack = 1e-9;

template <typename Scalar>
EntropyReport<Scalar> make_entropy_report(Scalar h_x, Scalar h_p, Scalar bound, Scalar k) {
  EntropyReport<Scalar> r;
  r.h_x = h_x;
  r.h_p = h_p;
  r.eur_sum = h_x + h_p;
  r.eur_bound = bound;
  r.thermo_s = k * h_p;
  r.satisfies_eur = r.eur_sum >= bound - Scalar(kEurSlack);
  return r;
}

/// Position and momentum entropies of a state and the uncertainty-relation check.
template <typename Scalar>
EntropyReport<Scalar> eur_report(const WaveFunction<Scalar>& wf, Scalar bound = eur_bound_leipnik<Scalar>(),
                                 Scalar k = Scalar(1)) {
  const Scalar h_x = differential_entropy(wf.density());
  const Scalar h_p = differential_entropy(to_momentum(wf).density());
  return make_entropy_report(h_x, h_p, bound, k);
}

/// Thermodynamic entropy k * h_p of a state.
template <typename Scalar>
Scalar thermodynamic_entropy(const WaveFunction<Scalar>& wf, Scalar k = Scalar(1)) {
  return k * differential_entropy(to_momentum(wf).density());
}

}  // namespace mdemon
