#pragma once

#include <complex>
#include <vector>

#include "bqm/numerics.hpp"

namespace bqm {

using cplx = std::complex<double>;

// Equidistant coordinate lattice x_n = n a + theta, n in [n_min, n_max].
// a = pi/K for the governing model; theta labels the self-adjoint extension.
struct Grid {
  double a = 1.0;
  double theta = 0.0;
  long n_min = -50;
  long n_max = 50;

  double x(long n) const { return n * a + theta; }
  long size() const { return n_max - n_min + 1; }
  void validate() const {
    if (!(a > 0.0) || theta < 0.0 || theta >= a || n_min > n_max)
      throw domain_error("Grid: need a > 0, 0 <= theta < a, n_min <= n_max");
  }
};

struct SampledFunction {
  Grid grid;
  std::vector<cplx> values;  // one per grid point, index n - n_min

  cplx value(long n) const { return values[static_cast<std::size_t>(n - grid.n_min)]; }
};

// Canonical representation of a bandlimited function: its samples on one grid.
struct BandlimitedFunction {
  SampledFunction source;
  double K = 0.0;
};

BandlimitedFunction make_bandlimited(SampledFunction s);

// sqrt(a) exp(i k (n a + theta)); the coordinate-operator eigenfunction
// overlap in the wavevector representation.
cplx grid_eigenfunction(const Grid& g, long n, double k);

// Sinc interpolation a * sum_n value_n Pi(x - x_n).  With accelerate the
// ring-ordered partial sums are extrapolated by the Wynn epsilon algorithm,
// which is what makes slowly decaying (1/n) sinc tails usable.
cplx reconstruct(const BandlimitedFunction& b, double x, bool accelerate = false);
double reconstruct_real(const BandlimitedFunction& b, double x,
                        bool accelerate = false);

// Evaluate the reconstruction on the points of g2 (same spacing required).
SampledFunction resample(const BandlimitedFunction& b, const Grid& g2,
                         bool accelerate = false);

// Reconstruct from the original samples and from the theta2-resampled set;
// returns the max abs deviation over 101 probes in [-5a, 5a].
double shift_equivalence_check(const BandlimitedFunction& b, double theta2,
                               bool accelerate = false);

}  // namespace bqm
