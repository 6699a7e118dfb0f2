#include "bqm/maxloc.hpp"

#include <cmath>

namespace bqm {

std::complex<double> maxloc_wavevector(const MaxLocState& s, double k) {
  if (!(s.K > 0.0)) throw domain_error("maxloc: K must be positive");
  if (std::fabs(k) > s.K * (1.0 + 1e-12))
    throw domain_error("maxloc_wavevector: wavevector outside the band");
  const double a = s.a();
  return std::sqrt(2.0 * a) * std::exp(std::complex<double>(0.0, -k * s.center)) *
         std::cos(0.5 * k * a);
}

double maxloc_coordinate(const MaxLocState& s, double x) {
  if (!(s.K > 0.0)) throw domain_error("maxloc: K must be positive");
  if (!std::isfinite(x)) throw domain_error("maxloc_coordinate: x not finite");
  const double a = s.a();
  const double d = x - s.center;
  return std::sqrt(0.5 * a) *
         (projector_kernel(d + 0.5 * a, s.K) + projector_kernel(d - 0.5 * a, s.K));
}

double maxloc_coordinate_via_fourier(const MaxLocState& s, double x) {
  // (1/2pi) \int_{-K}^{K} phi~(k) e^{ikx} dk; integrand is real by symmetry
  const double a = s.a();
  const double d = x - s.center;
  auto f = [&](double k) {
    return std::sqrt(2.0 * a) * std::cos(0.5 * k * a) * std::cos(k * d);
  };
  const double k_osc = std::fabs(d) + 0.5 * a;  // fastest phase in k
  QuadSpec spec;
  return oscillatory_integrate_t(f, 0.0, s.K, k_osc, spec) / M_PI;
}

double maxloc_norm(const MaxLocState& s) {
  const double a = s.a();
  auto f = [&](double k) {
    const double c = std::cos(0.5 * k * a);
    return 2.0 * a * c * c;
  };
  return oscillatory_integrate_t(f, 0.0, s.K, a, QuadSpec{}) / M_PI;
}

double position_variance(const MaxLocState& s) {
  // d_k phi~ (phase-centered) = -sqrt(2a) (a/2) sin(k a/2)
  const double a = s.a();
  auto f = [&](double k) {
    const double g = std::sin(0.5 * k * a);
    return 2.0 * a * 0.25 * a * a * g * g;
  };
  return oscillatory_integrate_t(f, 0.0, s.K, a, QuadSpec{}) / M_PI;
}

bool maxloc_energy_finite(const Deformation& d, const ModelParams& p) {
  // I(P) = \int_0^P dp p^2 cos^2(k(p) a/2) / f(alpha p), k = F(alpha p)/(alpha hbar).
  // Compare increments on successive octaves of the cutoff.
  const double a = p.a;
  auto integrand = [&](double mom) {
    const double u = p.alpha * mom;
    const double k = d.F(u) / (p.alpha * p.hbar);
    const double c = std::cos(0.5 * k * a);
    return mom * mom * c * c / d.f(u);
  };
  const double p_band = d.F_inv(0.999 * d.F_infinity) / p.alpha;
  double lo = p_band;
  double inc_prev = -1.0;
  int shrinking = 0;
  QuadSpec spec;
  spec.rel_tol = 1e-8;
  for (int oct = 0; oct < 6; ++oct) {
    const double hi = 2.0 * lo;
    const double inc =
        oscillatory_integrate_t(integrand, lo, hi, a / p.hbar, spec);
    if (inc_prev >= 0.0) {
      if (inc < 0.5 * inc_prev + 1e-300)  // epsilon keeps 0-vs-0 counting as decay
        ++shrinking;
      else
        shrinking = 0;
    }
    inc_prev = inc;
    lo = hi;
  }
  return shrinking >= 2;
}

}  // namespace bqm
