#pragma once

#include <complex>
#include <vector>

#include "bqm/deformation.hpp"

namespace bqm {

struct WellSpec {
  double V0 = 0.0;  // depth (walls at V0, bottom at 0)
  double L = 1.0;
  int level_max = 1;
  bool infinite_depth = false;

  void validate() const {
    if (!(L > 0.0) || level_max < 1 ||
        (!infinite_depth && !(V0 > 0.0)))
      throw domain_error("WellSpec: need L > 0, level_max >= 1, V0 > 0");
  }
};

enum class Branch { plus, minus };  // k_+ <-> odd n, k_- <-> even n

struct BoxLevel {
  int n = 1;
  Branch branch = Branch::plus;
  double L = 1.0;
  double k = 0.0;      // n pi / L in the infinite-depth limit
  double kappa = 0.0;  // decay constant outside; +inf when infinite_depth
  double eps = 0.0;    // hbar^2 k^2 / 2m
  std::complex<double> rho;  // 1 +- e^{ikL}
  double B2 = 0.0;           // |B|^2 normalization
  double residual = 0.0;     // quantization-condition residual
  bool infinite_depth = false;
};

struct NuDecomposition {
  long N = 0;
  double nu = 0.0;  // KL = 2 pi (N + nu)
  long N_prime = 0;
  double nu_prime = 0.0;  // KL = 4 pi (N' + nu')
};

NuDecomposition nu_decompose(double KL);

// Bound states of the finite symmetric well from bracketed root-finding of
// the quantization condition; levels with no root below V0 are dropped.
std::vector<BoxLevel> solve_bound_states(const WellSpec& w, const ModelParams& p);

// The V0 -> infinity level k = n pi / L.
BoxLevel deep_well_level(int n, double L, const ModelParams& p);

struct GupShift {
  double h_nn = 0.0;
  double R_h = 0.0;
};
// Pure dispersion shift.  Infinite depth: R_h = (F^-1(u)/u)^2 - 1 at
// u = alpha hbar k.  Finite depth: the bracketed finite-kappa formula
// including the exponential-tail term (needs the family's continuation).
GupShift pure_gup_shift(const BoxLevel& lvl, const Deformation& d,
                        const ModelParams& p);

struct PotentialShift {
  double v_nn = 0.0;
  double R_v = 0.0;
  double Ic_exact = 0.0;   // \int_{KL-kL}^{KL+kL} (1-cos u)/u du
  double Ic_series = 0.0;  // (k/K)[4 sin^2(nu pi) + (n pi)^2 cos(2 nu pi)]
};
PotentialShift potential_shift(const BoxLevel& lvl, const ModelParams& p);

struct KineticShift {
  double t_nn = 0.0;          // R_t (1 + R_h) eps
  double t_nn_leading = 0.0;  // R_t eps
  double R_t = 0.0;           // (2/pi) Si(KL/2) - 1, exact route
  double R_t_cos = 0.0;       // (4/(KL pi)) (1 - cos(2 pi nu')) cross-check
};
KineticShift kinetic_shift(const BoxLevel& lvl, const Deformation& d,
                           const ModelParams& p);

enum class ExpKind { oscillatory, decaying };
// Kinetic eigenvalue on e^{isx} (oscillatory) or e^{sx} (decaying); the
// decaying case needs the family's known analytic continuation.
double kinetic_on_exponential(const Deformation& d, const ModelParams& p,
                              double s, ExpKind kind);

// nu-averages over one grid spacing's worth of box-size variation
// (64-point Gauss-Legendre on [0,1]).
double nu_average_Rv(int n, double KL, const ModelParams& p);
struct RtAverage {
  double cosine_form = 0.0;  // average of the cosine approximation
  double exact_form = 0.0;   // average of (2/pi) Si(KL/2) - 1 itself
};
RtAverage nu_average_Rt(double KL);

struct ShiftRow {
  BoxLevel level;
  GupShift h;
  PotentialShift v;
  KineticShift t;
};
struct ShiftReport {
  std::vector<ShiftRow> rows;
  double R_v_avg = 0.0;
  double R_t_avg_cos = 0.0;
  double R_t_avg_exact = 0.0;
};
ShiftReport shift_report(const WellSpec& w, const Deformation& d,
                         const ModelParams& p);

// Dense diagonalization of the projected Hamiltonian in the full in-band
// plane-wave basis on a periodic domain.  Returns the lowest n_levels
// energies.  If the basis would exceed basis_cap, K is reduced for this run
// (reduced_K reports what was used).
std::vector<double> brute_force_oracle(const WellSpec& w, const Deformation& d,
                                       const ModelParams& p, int basis_cap,
                                       double domain_length, int n_levels,
                                       double* reduced_K = nullptr);

// Order-of-magnitude context: (l_P / L) and (l_P / L)^2 for laboratory box
// sizes, with l_P = 1.616e-35 m.
struct ScaleRow {
  double L_m = 0.0;
  double lp_over_L = 0.0;
  double lp_over_L_sq = 0.0;
};
std::vector<ScaleRow> planck_scale_table();

}  // namespace bqm
