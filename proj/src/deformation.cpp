#include "bqm/deformation.hpp"

#include <cmath>

namespace bqm {

namespace {

// Safeguarded Newton inversion of the gauss family's F(u) = (sqrt(pi)/2) erf(u).
// F' = exp(-u^2), monotone; bisection bracket keeps Newton honest.
double gauss_F_inv(double v) {
  const double Finf = std::sqrt(M_PI) / 2.0;
  const double av = std::fabs(v);
  if (av >= Finf)
    throw domain_error("gauss F_inv: |v| must be < sqrt(pi)/2");
  if (av == 0.0) return 0.0;
  auto F = [&](double u) { return Finf * std::erf(u); };
  double lo = 0.0, hi = 1.0;
  while (F(hi) < av) hi *= 2.0;
  double u = av;  // series start: F ~ u near 0
  for (int it = 0; it < 100; ++it) {
    const double r = F(u) - av;
    if (r > 0)
      hi = u;
    else
      lo = u;
    const double step = r * std::exp(u * u);  // r / F'(u)
    double next = u - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - u) < 1e-14 * (1.0 + std::fabs(u))) {
      u = next;
      break;
    }
    u = next;
  }
  return v < 0 ? -u : u;
}

double sgn(double x) { return x < 0 ? -1.0 : 1.0; }

}  // namespace

Deformation builtin(const std::string& name, double identity_band_edge) {
  Deformation d;
  d.name = name;
  if (name == "kmm") {
    d.f = [](double u) { return 1.0 + u * u; };
    d.F = [](double u) { return std::atan(u); };
    d.F_inv = [](double v) { return std::tan(v); };
    d.f1 = 0.0;
    d.f2 = 1.0;
    d.F_infinity = M_PI / 2.0;
    d.box_admissible = true;        // tanh^2 stays bounded
    d.maxloc_energy_finite = false;  // p^2/f -> const, integral diverges
    d.F_inv_continued_sq = [](double w) {
      const double t = std::tanh(w);
      return -t * t;  // [-i tanh(w)]^2
    };
    d.f_of_usq = [](double us) { return 1.0 + us; };
    d.f_of_usq_prime = [](double) { return 1.0; };
  } else if (name == "gauss") {
    d.f = [](double u) { return std::exp(u * u); };
    d.F = [](double u) { return std::sqrt(M_PI) / 2.0 * std::erf(u); };
    d.F_inv = gauss_F_inv;
    d.f1 = 0.0;
    d.f2 = 1.0;
    d.F_infinity = std::sqrt(M_PI) / 2.0;
    d.box_admissible = true;
    d.maxloc_energy_finite = true;
    // continuation needs the inverse of erfi; not provided in closed form
    d.f_of_usq = [](double us) { return std::exp(us); };
    d.f_of_usq_prime = [](double us) { return std::exp(us); };
  } else if (name == "exp_abs") {
    d.f = [](double u) { return std::exp(std::fabs(u)); };
    d.F = [](double u) { return (1.0 - std::exp(-std::fabs(u))) * sgn(u); };
    d.F_inv = [](double v) {
      const double av = std::fabs(v);
      if (av >= 1.0) throw domain_error("exp_abs F_inv: |v| must be < 1");
      return -std::log(1.0 - av) * sgn(v);
    };
    d.f1 = 1.0;
    d.f2 = 0.5;
    d.F_infinity = 1.0;
    d.box_admissible = true;
    d.maxloc_energy_finite = true;
    // f is not analytic at u = 0, no continuation onto real exponentials
    d.f_of_usq = [](double us) { return std::exp(std::sqrt(us)); };
    d.f_of_usq_prime = [](double us) {
      const double r = std::sqrt(us);
      if (r < 1e-12)
        throw domain_error("exp_abs: f'(ubar) singular at ubar = 0");
      return std::exp(r) / (2.0 * r);
    };
  } else if (name == "identity") {
    if (!(identity_band_edge > 0.0) || !std::isfinite(identity_band_edge))
      throw domain_error("identity family needs a finite positive band edge");
    d.f = [](double) { return 1.0; };
    d.F = [](double u) { return u; };
    d.F_inv = [](double v) { return v; };
    d.f1 = 0.0;
    d.f2 = 0.0;
    d.F_infinity = identity_band_edge;
    d.box_admissible = true;
    d.maxloc_energy_finite = false;  // f does not grow
    d.F_inv_continued_sq = [](double w) { return -w * w; };
    d.f_of_usq = [](double) { return 1.0; };
    d.f_of_usq_prime = [](double) { return 0.0; };
  } else {
    throw domain_error("unknown deformation family: " + name);
  }
  return d;
}

ModelParams make_params(const Deformation& d, double alpha, double hbar,
                        double mass) {
  if (!(alpha > 0.0) || !(hbar > 0.0) || !(mass > 0.0))
    throw domain_error("make_params: alpha, hbar, mass must be positive");
  ModelParams p;
  p.alpha = alpha;
  p.hbar = hbar;
  p.mass = mass;
  p.K = d.F_infinity / (alpha * hbar);
  p.a = M_PI / p.K;
  return p;
}

double kinetic_energy(const Deformation& d, const ModelParams& p, double k) {
  if (std::fabs(k) > p.K * (1.0 + 1e-12))
    throw domain_error("kinetic_energy: wavevector outside the band");
  const double v = p.alpha * p.hbar * k;
  const double u = d.F_inv(v);
  return u * u / (2.0 * p.mass * p.alpha * p.alpha);
}

SeriesReport series_check(const Deformation& d) {
  SeriesReport rep;
  const double us[] = {1e-4, 3e-4, 1e-3, 3e-3};
  for (double u : us) {
    const double serF =
        u - 0.5 * d.f1 * u * std::fabs(u) +
        (d.f1 * d.f1 - d.f2) / 3.0 * u * u * u;
    const double serFi =
        u + 0.5 * d.f1 * u * std::fabs(u) +
        (d.f1 * d.f1 + 2.0 * d.f2) / 6.0 * u * u * u;
    rep.max_rel_dev_F =
        std::max(rep.max_rel_dev_F, std::fabs(d.F(u) - serF) / u);
    rep.max_rel_dev_F_inv =
        std::max(rep.max_rel_dev_F_inv, std::fabs(d.F_inv(u) - serFi) / u);
  }
  // the neglected term is O(u^3) relative (O(u^4) absolute); 3e-3 cubed
  // with a generous coefficient
  const double slack = 1e-7;
  rep.ok = rep.max_rel_dev_F < slack && rep.max_rel_dev_F_inv < slack;
  return rep;
}

Admissibility is_admissible(const Deformation& d) {
  Admissibility adm;
  adm.box_ok = d.box_admissible;
  adm.maxloc_energy_finite = d.maxloc_energy_finite;
  return adm;
}

}  // namespace bqm
