#pragma once

#include <complex>

#include "bqm/deformation.hpp"
#include "bqm/numerics.hpp"

namespace bqm {

// Maximally localized physical state centered at `center`: position variance
// a^2/4, the minimum attainable within the band |k| <= K.
struct MaxLocState {
  double center = 0.0;
  double K = 0.0;

  double a() const { return M_PI / K; }
};

// Wavevector representation sqrt(2a) exp(-i k center) cos(k a / 2);
// vanishes at the band edges.
std::complex<double> maxloc_wavevector(const MaxLocState& s, double k);

// Coordinate representation sqrt(a/2) [Pi(x - center + a/2) + Pi(x - center - a/2)].
double maxloc_coordinate(const MaxLocState& s, double x);

// Same function obtained by Fourier transforming the wavevector form over
// the band; used as a route cross-check.
double maxloc_coordinate_via_fourier(const MaxLocState& s, double x);

// (1/2pi) \int |phi~|^2 dk over the band.
double maxloc_norm(const MaxLocState& s);

// <x^2> - center^2, evaluated in the wavevector representation as
// (1/2pi) \int |d_k phi~|^2 dk after phase-centering.
double position_variance(const MaxLocState& s);

// Convergence probe of the maxloc kinetic-energy integral
// \int dp p^2 cos^2(k(p) a/2) / f(|alpha p|): true if doubling the momentum
// cutoff shows a geometrically shrinking increment.
bool maxloc_energy_finite(const Deformation& d, const ModelParams& p);

}  // namespace bqm
