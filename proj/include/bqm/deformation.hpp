#pragma once

#include <functional>
#include <string>

#include "bqm/numerics.hpp"

namespace bqm {

// A GUP deformation family.  u = alpha * p is the dimensionless canonical
// momentum; wavevector and momentum are linked by alpha hbar k = F(u).
struct Deformation {
  std::string name;
  std::function<double(double)> f;      // f(u), even, f(0) = 1
  std::function<double(double)> F;      // F(u) = \int_0^u du'/f(|u'|), odd
  std::function<double(double)> F_inv;  // inverse of F on (-F_infinity, F_infinity)
  double f1 = 0.0;                      // f(u) = 1 + f1 |u| + f2 u^2 + ...
  double f2 = 0.0;
  double F_infinity = 0.0;              // F(+inf); band edge alpha hbar K

  // admissibility sub-results (see is_admissible)
  bool box_admissible = false;
  bool maxloc_energy_finite = false;

  // [F^-1(-i w)]^2 for real w > 0, where the analytic continuation onto
  // decaying exponentials is known in closed form; empty otherwise.
  std::function<double(double)> F_inv_continued_sq;

  // \bar f = f and f' viewed as functions of ubar = (alpha p)^2, the
  // convention used by the wavepacket expansion.
  std::function<double(double)> f_of_usq;
  std::function<double(double)> f_of_usq_prime;
};

struct ModelParams {
  double alpha = 0.0;
  double hbar = 1.0;
  double mass = 1.0;
  double K = 0.0;  // F_infinity / (alpha hbar)
  double a = 0.0;  // pi / K
};

// Built-in families: kmm (f = 1+u^2), gauss (f = exp(u^2)), exp_abs
// (f = exp|u|), identity (f = 1 with a caller-supplied hard band edge
// alpha hbar K = identity_band_edge).
Deformation builtin(const std::string& name, double identity_band_edge = 1.0);

ModelParams make_params(const Deformation& d, double alpha, double hbar = 1.0,
                        double mass = 1.0);

// [F^-1(alpha hbar k)]^2 / (2 m alpha^2); throws for |k| > K.
double kinetic_energy(const Deformation& d, const ModelParams& p, double k);

struct SeriesReport {
  double max_rel_dev_F = 0.0;     // against F(u) ~ u - f1 u|u|/2 + (f1^2-f2) u^3/3
  double max_rel_dev_F_inv = 0.0; // against F^-1(v) ~ v + f1 v|v|/2 + (f1^2+2f2) v^3/6
  bool ok = false;
};
SeriesReport series_check(const Deformation& d);

struct Admissibility {
  bool box_ok = false;              // [F^-1(-i a hbar kappa)]^2 kappa^-3 -> 0
  bool maxloc_energy_finite = false;  // maxloc kinetic-energy integral converges
};
Admissibility is_admissible(const Deformation& d);

}  // namespace bqm
