#include "bqm/boxspectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace bqm {

namespace {

double sinc(double x) {
  return std::fabs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct GL64 {
  std::vector<double> x, w;
  GL64() { gauss_legendre(64, x, w); }
};
const GL64& gl64() {
  static const GL64 g;
  return g;
}

double Ic_plus(double KL, double kL) {
  auto f = [](double u) { return (1.0 - std::cos(u)) / u; };
  QuadSpec spec;
  spec.panel_width = M_PI / 8.0;
  return oscillatory_integrate_t(f, KL - kL, KL + kL, 1.0, spec);
}

}  // namespace

NuDecomposition nu_decompose(double KL) {
  if (!(KL > 0.0)) throw domain_error("nu_decompose: KL must be positive");
  NuDecomposition nd;
  const double r2 = KL / (2.0 * M_PI);
  nd.N = static_cast<long>(std::floor(r2));
  nd.nu = r2 - nd.N;
  const double r4 = KL / (4.0 * M_PI);
  nd.N_prime = static_cast<long>(std::floor(r4));
  nd.nu_prime = r4 - nd.N_prime;
  return nd;
}

BoxLevel deep_well_level(int n, double L, const ModelParams& p) {
  if (n < 1) throw domain_error("deep_well_level: n >= 1 required");
  BoxLevel lvl;
  lvl.n = n;
  lvl.branch = (n % 2 == 1) ? Branch::plus : Branch::minus;
  lvl.L = L;
  lvl.k = n * M_PI / L;
  lvl.kappa = std::numeric_limits<double>::infinity();
  lvl.eps = p.hbar * p.hbar * lvl.k * lvl.k / (2.0 * p.mass);
  lvl.rho = std::complex<double>(0.0, 0.0);
  lvl.B2 = 1.0 / (2.0 * L);
  lvl.infinite_depth = true;
  return lvl;
}

std::vector<BoxLevel> solve_bound_states(const WellSpec& w,
                                         const ModelParams& p) {
  w.validate();
  if (w.infinite_depth) {
    std::vector<BoxLevel> out;
    for (int n = 1; n <= w.level_max; ++n)
      out.push_back(deep_well_level(n, w.L, p));
    return out;
  }
  const double L = w.L;
  const double KL = p.K * L;
  if (KL < 100.0)
    std::fprintf(stderr, "solve_bound_states: KL = %g < 100, outside the "
                         "regime the shift formulas assume\n", KL);
  const double k_top = std::sqrt(2.0 * p.mass * w.V0) / p.hbar;
  auto kappa_of = [&](double k) {
    return std::sqrt(std::max(0.0, k_top * k_top - k * k));
  };
  std::vector<BoxLevel> out;
  for (int n = 1; n <= w.level_max; ++n) {
    const bool odd = (n % 2 == 1);
    // odd n (plus branch): tan(kL/2) = kappa/k; even n: -cot(kL/2) = kappa/k
    auto fn = [&](double k) {
      const double h = 0.5 * k * L;
      return odd ? k * std::sin(h) - kappa_of(k) * std::cos(h)
                 : k * std::cos(h) + kappa_of(k) * std::sin(h);
    };
    double lo = (n - 1) * M_PI / L + 1e-12 / L;
    double hi = std::min(n * M_PI / L, k_top) - 1e-12 / L;
    if (lo >= hi || fn(lo) * fn(hi) > 0.0) {
      std::fprintf(stderr,
                   "solve_bound_states: level n = %d lies above the well "
                   "depth, excluded\n", n);
      break;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (fn(lo) * fn(mid) <= 0.0 ? hi : lo) = mid;
    }
    BoxLevel lvl;
    lvl.n = n;
    lvl.branch = odd ? Branch::plus : Branch::minus;
    lvl.L = L;
    lvl.k = 0.5 * (lo + hi);
    lvl.kappa = kappa_of(lvl.k);
    lvl.eps = p.hbar * p.hbar * lvl.k * lvl.k / (2.0 * p.mass);
    const std::complex<double> ph = std::exp(std::complex<double>(0.0, lvl.k * L));
    lvl.rho = odd ? 1.0 + ph : 1.0 - ph;
    const std::complex<double> refl =
        (lvl.kappa - std::complex<double>(0.0, lvl.k)) /
        (lvl.kappa + std::complex<double>(0.0, lvl.k));
    lvl.residual = std::abs(odd ? ph + refl : ph - refl);
    const double r2 = std::norm(lvl.rho);
    lvl.B2 = 1.0 / (2.0 * L * (1.0 + sinc(lvl.k * L) +
                               r2 / (2.0 * lvl.kappa * L)));
    out.push_back(lvl);
  }
  return out;
}

GupShift pure_gup_shift(const BoxLevel& lvl, const Deformation& d,
                        const ModelParams& p) {
  const double u = p.alpha * p.hbar * lvl.k;
  if (u >= 0.99 * d.F_infinity)
    throw domain_error("pure_gup_shift: level too close to the band edge, "
                       "first-order expansion invalid");
  GupShift out;
  const double Fi = d.F_inv(u);
  if (lvl.infinite_depth) {
    out.R_h = (Fi / u) * (Fi / u) - 1.0;
    out.h_nn = out.R_h * lvl.eps;
    return out;
  }
  if (!d.F_inv_continued_sq)
    throw domain_error("pure_gup_shift: family '" + d.name +
                       "' has no known continuation for the wall tails");
  const double wk = p.alpha * p.hbar * lvl.kappa;
  const double sc = sinc(lvl.k * lvl.L);
  const double tail = std::norm(lvl.rho) / (2.0 * lvl.kappa * lvl.L);
  const double num = (1.0 + sc) * (Fi * Fi - u * u) +
                     tail * (d.F_inv_continued_sq(wk) + wk * wk);
  const double den =
      2.0 * p.mass * p.alpha * p.alpha * (1.0 + sc + tail);
  out.h_nn = num / den;
  out.R_h = out.h_nn / lvl.eps;
  return out;
}

PotentialShift potential_shift(const BoxLevel& lvl, const ModelParams& p) {
  PotentialShift out;
  const double KL = p.K * lvl.L;
  const double kL = lvl.k * lvl.L;
  out.Ic_exact = Ic_plus(KL, kL);
  const NuDecomposition nd = nu_decompose(KL);
  out.Ic_series = (lvl.k / p.K) *
                  (4.0 * std::pow(std::sin(nd.nu * M_PI), 2) +
                   kL * kL * std::cos(2.0 * nd.nu * M_PI));
  if (lvl.n % 2 == 1) {
    out.v_nn = p.hbar * p.hbar * lvl.k * out.Ic_exact /
               (p.mass * lvl.L * M_PI);
    out.R_v = out.v_nn / lvl.eps;
  }
  return out;
}

KineticShift kinetic_shift(const BoxLevel& lvl, const Deformation& d,
                           const ModelParams& p) {
  KineticShift out;
  const double KL = p.K * lvl.L;
  out.R_t = (2.0 / M_PI) * sine_integral(0.5 * KL) - 1.0;
  const NuDecomposition nd = nu_decompose(KL);
  out.R_t_cos = 4.0 / (KL * M_PI) * (1.0 - std::cos(2.0 * M_PI * nd.nu_prime));
  const GupShift h = pure_gup_shift(
      lvl.infinite_depth ? lvl : deep_well_level(lvl.n, lvl.L, p), d, p);
  out.t_nn = out.R_t * (1.0 + h.R_h) * lvl.eps;
  out.t_nn_leading = out.R_t * lvl.eps;
  return out;
}

double kinetic_on_exponential(const Deformation& d, const ModelParams& p,
                              double s, ExpKind kind) {
  const double v = p.alpha * p.hbar * std::fabs(s);
  const double pref = 1.0 / (2.0 * p.mass * p.alpha * p.alpha);
  if (kind == ExpKind::oscillatory) {
    if (v >= d.F_infinity)
      throw domain_error("kinetic_on_exponential: wavevector outside the band");
    const double Fi = d.F_inv(v);
    return pref * Fi * Fi;
  }
  if (!d.F_inv_continued_sq)
    throw domain_error("kinetic_on_exponential: family '" + d.name +
                       "' has no known analytic continuation");
  return pref * d.F_inv_continued_sq(v);
}

double nu_average_Rv(int n, double KL, const ModelParams&) {
  if (n % 2 == 0) return 0.0;
  const long N = static_cast<long>(std::floor(KL / (2.0 * M_PI)));
  const double kL = n * M_PI;
  const auto& g = gl64();
  double acc = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double nu = 0.5 * (g.x[i] + 1.0);
    const double KLnu = 2.0 * M_PI * (N + nu);
    acc += 0.5 * g.w[i] * 2.0 * Ic_plus(KLnu, kL) / (kL * M_PI);
  }
  return acc;
}

RtAverage nu_average_Rt(double KL) {
  const long Np = static_cast<long>(std::floor(KL / (4.0 * M_PI)));
  const auto& g = gl64();
  RtAverage out;
  for (int i = 0; i < 64; ++i) {
    const double nup = 0.5 * (g.x[i] + 1.0);
    const double KLnu = 4.0 * M_PI * (Np + nup);
    out.cosine_form += 0.5 * g.w[i] * 4.0 / (KLnu * M_PI) *
                       (1.0 - std::cos(2.0 * M_PI * nup));
    out.exact_form +=
        0.5 * g.w[i] * ((2.0 / M_PI) * sine_integral(0.5 * KLnu) - 1.0);
  }
  return out;
}

ShiftReport shift_report(const WellSpec& w, const Deformation& d,
                         const ModelParams& p) {
  w.validate();
  ShiftReport rep;
  for (int n = 1; n <= w.level_max; ++n) {
    ShiftRow row;
    row.level = deep_well_level(n, w.L, p);
    row.h = pure_gup_shift(row.level, d, p);
    row.v = potential_shift(row.level, p);
    row.t = kinetic_shift(row.level, d, p);
    rep.rows.push_back(row);
  }
  const double KL = p.K * w.L;
  rep.R_v_avg = nu_average_Rv(1, KL, p);
  const RtAverage rt = nu_average_Rt(KL);
  rep.R_t_avg_cos = rt.cosine_form;
  rep.R_t_avg_exact = rt.exact_form;
  return rep;
}

std::vector<double> brute_force_oracle(const WellSpec& w, const Deformation& d,
                                       const ModelParams& p, int basis_cap,
                                       double domain_length, int n_levels,
                                       double* reduced_K) {
  w.validate();
  if (w.infinite_depth)
    throw domain_error("brute_force_oracle: needs a finite well depth");
  if (!(domain_length >= 2.0 * w.L))
    throw domain_error("brute_force_oracle: domain must cover twice the well");
  const double D = domain_length;
  long M = static_cast<long>(std::floor(p.K * D / (2.0 * M_PI)));
  double K_used = p.K;
  if (2 * M + 1 > basis_cap) {
    M = (basis_cap - 1) / 2;
    K_used = 2.0 * M_PI * M / D;
    std::fprintf(stderr,
                 "brute_force_oracle: basis cap %d forces K reduction "
                 "%g -> %g\n", basis_cap, p.K, K_used);
  }
  if (reduced_K) *reduced_K = K_used;
  const long size = 2 * M + 1;
  Eigen::MatrixXd H(size, size);
  // potential: walls at V0 outside the centered interval [-L/2, L/2];
  // in-band Fourier components on the periodic domain
  const double Vdiag = w.V0 * (1.0 - w.L / D);
  for (long i = 0; i < size; ++i) {
    for (long j = 0; j <= i; ++j) {
      if (i == j) continue;
      const double q = 2.0 * M_PI * (i - j) / D;
      const double vij = -w.V0 * 2.0 * std::sin(0.5 * q * w.L) / (q * D);
      H(i, j) = vij;
      H(j, i) = vij;
    }
  }
  for (long i = 0; i < size; ++i) {
    const long m = i - M;
    const double km = 2.0 * M_PI * m / D;
    const double Fi = d.F_inv(p.alpha * p.hbar * km);
    H(i, i) = Fi * Fi / (2.0 * p.mass * p.alpha * p.alpha) + Vdiag;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw convergence_error("brute_force_oracle: eigensolver failed", 0.0, 0.0);
  std::vector<double> out;
  for (int i = 0; i < n_levels && i < size; ++i)
    out.push_back(es.eigenvalues()(i));
  return out;
}

std::vector<ScaleRow> planck_scale_table() {
  constexpr double lp = 1.616e-35;  // m
  std::vector<ScaleRow> rows;
  for (double L : {1e-15, 1e-10, 1e-6}) {
    ScaleRow r;
    r.L_m = L;
    r.lp_over_L = lp / L;
    r.lp_over_L_sq = r.lp_over_L * r.lp_over_L;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace bqm
