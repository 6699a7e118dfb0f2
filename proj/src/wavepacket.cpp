#include "bqm/wavepacket.hpp"

#include <cmath>
#include <cstdio>

namespace bqm {

WavepacketDiagnostics diagnostics(const WavepacketSpec& w, const Deformation& d,
                                  const ModelParams& p) {
  if (std::fabs(w.k_bar) >= p.K)
    throw domain_error("wavepacket: k_bar must lie strictly inside the band");
  if (!(w.sigma_p > 0.0)) throw domain_error("wavepacket: sigma_p must be > 0");
  WavepacketDiagnostics g;
  g.p_bar = d.F_inv(p.alpha * p.hbar * w.k_bar) / p.alpha;
  g.u_bar = p.alpha * p.alpha * g.p_bar * g.p_bar;
  g.f_bar = d.f_of_usq(g.u_bar);
  g.f_bar_prime = d.f_of_usq_prime(g.u_bar);
  g.v_bar = g.f_bar * g.p_bar / p.mass;
  g.beta1 = 2.0 * p.hbar * g.p_bar * g.f_bar;
  const double denom = g.f_bar + 2.0 * g.u_bar * g.f_bar_prime;
  g.beta2 = p.hbar * p.hbar * g.f_bar * denom;
  g.tau0 = p.mass * p.hbar / (2.0 * w.sigma_p * w.sigma_p);
  g.tau = g.tau0 * g.f_bar / denom;
  g.sigma_x2_0 =
      p.hbar * p.hbar * g.f_bar * g.f_bar / (4.0 * w.sigma_p * w.sigma_p);
  return g;
}

WavepacketEvolver::WavepacketEvolver(const WavepacketSpec& w,
                                     const Deformation& d,
                                     const ModelParams& p)
    : w_(w), d_(d), p_(p), diag_(diagnostics(w, d, p)) {
  if (w.sigma_p > 0.05 * p.hbar * p.K)
    std::fprintf(stderr,
                 "wavepacket: sigma_p = %g exceeds 0.05 hbar K = %g; Gaussian "
                 "approximations degrade\n",
                 w.sigma_p, 0.05 * p.hbar * p.K);
  // support: p_bar +- 8.5 sigma_p mapped through k = F(alpha p)/(alpha hbar),
  // clamped to the open band
  auto k_of_p = [&](double mom) {
    return d_.F(p_.alpha * mom) / (p_.alpha * p_.hbar);
  };
  const double edge = p_.K * (1.0 - 1e-12);
  k_lo_ = std::max(-edge, k_of_p(diag_.p_bar - 8.5 * w.sigma_p));
  k_hi_ = std::min(edge, k_of_p(diag_.p_bar + 8.5 * w.sigma_p));
  auto vg = [&](double k) {
    const double mom = d_.F_inv(p_.alpha * p_.hbar * k) / p_.alpha;
    return std::fabs(mom * d_.f(p_.alpha * mom) / p_.mass);
  };
  vg_max_ = std::max(vg(k_lo_), vg(k_hi_));
  // Parseval: ||psi||^2 = (1/2pi) \int |a0|^2 dk = 1
  auto g2 = [&](double k) {
    const double mom = d_.F_inv(p_.alpha * p_.hbar * k) / p_.alpha;
    const double z = (mom - diag_.p_bar) / w_.sigma_p;
    return std::exp(-0.5 * z * z);
  };
  QuadSpec spec;
  spec.panel_width = (k_hi_ - k_lo_) / 64.0;
  const double nrm = oscillatory_integrate_t(g2, k_lo_, k_hi_, 0.0, spec);
  norm_const_ = std::sqrt(2.0 * M_PI / nrm);
}

double WavepacketEvolver::amplitude(double k) const {
  if (std::fabs(k) > p_.K * (1.0 + 1e-12))
    throw domain_error("wavepacket amplitude: wavevector outside the band");
  if (k < k_lo_ || k > k_hi_) return 0.0;
  const double mom = d_.F_inv(p_.alpha * p_.hbar * k) / p_.alpha;
  const double z = (mom - diag_.p_bar) / w_.sigma_p;
  return norm_const_ * std::exp(-0.25 * z * z);
}

std::complex<double> WavepacketEvolver::psi(double x, double t) const {
  auto f = [&](double k) {
    const double mom = d_.F_inv(p_.alpha * p_.hbar * k) / p_.alpha;
    const double z = (mom - diag_.p_bar) / w_.sigma_p;
    const double amp = norm_const_ * std::exp(-0.25 * z * z);
    const double energy = mom * mom / (2.0 * p_.mass);
    const double phase = k * x - energy * t / p_.hbar;
    return std::complex<double>(amp * std::cos(phase), amp * std::sin(phase));
  };
  const double k_osc = std::fabs(x) + std::fabs(t) * vg_max_;
  QuadSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-12;
  return oscillatory_integrate_t(f, k_lo_, k_hi_, k_osc, spec) / (2.0 * M_PI);
}

double WavepacketEvolver::density(double x, double t) const {
  return std::norm(psi(x, t));
}

MomentFit WavepacketEvolver::fit_moments(double t, int points) const {
  const double c = diag_.v_bar * t;
  const double hw = 8.0 * std::sqrt(diag_.sigma_x2(t));
  const double h = 2.0 * hw / (points - 1);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = c - hw + i * h;
    double rho = density(x, t);
    if (i == 0 || i == points - 1) rho *= 0.5;  // trapezoid ends
    s0 += rho;
    s1 += rho * x;
    s2 += rho * x * x;
  }
  MomentFit fit;
  fit.norm = s0 * h;
  fit.center = s1 / s0;
  fit.variance = s2 / s0 - fit.center * fit.center;
  return fit;
}

double initial_amplitude(const WavepacketSpec& w, const Deformation& d,
                         const ModelParams& p, double k) {
  return WavepacketEvolver(w, d, p).amplitude(k);
}

std::complex<double> evolve(const WavepacketSpec& w, const Deformation& d,
                            const ModelParams& p, double x, double t) {
  return WavepacketEvolver(w, d, p).psi(x, t);
}

double gaussian_approx_density(const WavepacketSpec& w, const Deformation& d,
                               const ModelParams& p, double x, double t) {
  const WavepacketDiagnostics g = diagnostics(w, d, p);
  const double s2 = g.sigma_x2(t);
  const double dx = x - g.v_bar * t;
  return std::exp(-0.5 * dx * dx / s2) / std::sqrt(2.0 * M_PI * s2);
}

}  // namespace bqm
