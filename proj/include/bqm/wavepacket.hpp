#pragma once

#include <complex>
#include <vector>

#include "bqm/deformation.hpp"

namespace bqm {

struct WavepacketSpec {
  double k_bar = 0.0;    // mean wavevector, |k_bar| < K
  double sigma_p = 0.0;  // Gaussian width in canonical momentum
  std::vector<double> t_grid;
  std::vector<double> x_grid;
};

struct WavepacketDiagnostics {
  double p_bar = 0.0;
  double u_bar = 0.0;        // (alpha p_bar)^2
  double f_bar = 1.0;        // f(u_bar)
  double f_bar_prime = 0.0;  // df/du_bar
  double v_bar = 0.0;        // f_bar p_bar / m
  double beta1 = 0.0;        // 2 hbar p_bar f_bar
  double beta2 = 0.0;        // hbar^2 f_bar (f_bar + 2 u_bar f_bar')
  double tau0 = 0.0;         // m hbar / (2 sigma_p^2)
  double tau = 0.0;          // tau0 f_bar / (f_bar + 2 u_bar f_bar')
  double sigma_x2_0 = 0.0;   // hbar^2 f_bar^2 / (4 sigma_p^2)

  double sigma_x2(double t) const {
    return sigma_x2_0 * (1.0 + t * t / (tau * tau));
  }
};

struct MomentFit {
  double norm = 0.0;
  double center = 0.0;
  double variance = 0.0;
};

WavepacketDiagnostics diagnostics(const WavepacketSpec& w, const Deformation& d,
                                  const ModelParams& p);

// Gaussian amplitude in canonical momentum, N exp(-(p(k)-p_bar)^2/(4 sigma_p^2)),
// with N fixed so the coordinate-space norm is 1.
double initial_amplitude(const WavepacketSpec& w, const Deformation& d,
                         const ModelParams& p, double k);

// psi(x, t) = (1/2pi) \int_band dk a0(k) exp(i k x - i E(k) t / hbar).
std::complex<double> evolve(const WavepacketSpec& w, const Deformation& d,
                            const ModelParams& p, double x, double t);

double gaussian_approx_density(const WavepacketSpec& w, const Deformation& d,
                               const ModelParams& p, double x, double t);

// Precomputes normalization and integration support once; use this for
// sweeps instead of the free evolve().
class WavepacketEvolver {
 public:
  WavepacketEvolver(const WavepacketSpec& w, const Deformation& d,
                    const ModelParams& p);

  double amplitude(double k) const;  // normalized a0(k)
  std::complex<double> psi(double x, double t) const;
  double density(double x, double t) const;

  // Trapezoid moments of |psi|^2 over +-8 sigma_x(t) around v_bar t.
  MomentFit fit_moments(double t, int points = 801) const;

  const WavepacketDiagnostics& diag() const { return diag_; }

 private:
  WavepacketSpec w_;
  Deformation d_;
  ModelParams p_;
  WavepacketDiagnostics diag_;
  double k_lo_ = 0.0, k_hi_ = 0.0;  // integration support inside the band
  double vg_max_ = 0.0;             // fastest group velocity on the support
  double norm_const_ = 1.0;         // the N in a0
};

}  // namespace bqm
