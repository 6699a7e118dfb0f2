#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bqm/sampling.hpp"

using namespace bqm;

namespace {

BandlimitedFunction plane_wave(double k, double a, long window) {
  SampledFunction s;
  s.grid = Grid{a, 0.0, -window, window};
  for (long n = s.grid.n_min; n <= s.grid.n_max; ++n)
    s.values.push_back(std::exp(cplx(0.0, k * s.grid.x(n))));
  return make_bandlimited(std::move(s));
}

}  // namespace

TEST_CASE("grid eigenfunction basics") {
  Grid g{1.0, 0.0, -10, 10};
  CHECK(grid_eigenfunction(g, 0, 0.7).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(grid_eigenfunction(g, 0, 1.1 * M_PI), domain_error);
  Grid g2{0.5, 0.1, -10, 10};
  const cplx v = grid_eigenfunction(g2, 3, 2.0);
  CHECK(std::abs(v) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("grid eigenfunctions are orthonormal over the band") {
  Grid g{1.0, 0.3, -5, 5};
  const double K = M_PI / g.a;
  QuadSpec spec;
  for (long n : {-2L, 0L, 3L}) {
    for (long m : {-2L, 0L, 3L}) {
      auto f = [&](double k) {
        return (std::conj(grid_eigenfunction(g, n, k)) *
                grid_eigenfunction(g, m, k))
            .real();
      };
      const double I = oscillatory_integrate_t(
                           f, -K, K, std::fabs(double(n - m)) * g.a, spec) /
                       (2.0 * M_PI);
      CHECK(std::fabs(I - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("reconstruct trivial sample sets") {
  SampledFunction s;
  s.grid = Grid{1.0, 0.0, -20, 20};
  s.values.assign(41, cplx(0.0, 0.0));
  BandlimitedFunction zero = make_bandlimited(s);
  for (double x : {-3.3, 0.0, 7.1})
    CHECK(std::abs(reconstruct(zero, x)) == 0.0);

  s.values[20] = 1.0;  // delta_{n0}
  BandlimitedFunction single = make_bandlimited(s);
  for (double x : {-1.4, 0.25, 3.0})
    CHECK(reconstruct(single, x).real() ==
          doctest::Approx(1.0 * projector_kernel(x, M_PI)).epsilon(1e-14));
}

TEST_CASE("resample is interpolatory and invertible") {
  // sample data with fast-decaying (1/n^4) tails; the wide window keeps
  // truncation error on the shifted grid below the round-trip tolerance
  // at the interior points compared below
  SampledFunction s;
  s.grid = Grid{1.0, 0.0, -400, 400};
  for (long n = s.grid.n_min; n <= s.grid.n_max; ++n) {
    const double x = s.grid.x(n);
    const double bump =
        projector_kernel(x - 0.5, M_PI) + projector_kernel(x + 0.5, M_PI);
    s.values.push_back(0.5 * bump * bump);
  }
  BandlimitedFunction b = make_bandlimited(s);

  SampledFunction same = resample(b, b.source.grid);
  for (long n = -30; n <= 30; ++n)
    CHECK(std::abs(same.value(n) - b.source.value(n)) < 1e-10);

  // the shifted sample set picks up 1/n sinc tails (the samples have a
  // nonzero mean), so the round trip needs the accelerated sum
  Grid shifted = b.source.grid;
  shifted.theta = 0.5;
  BandlimitedFunction bs = make_bandlimited(resample(b, shifted, true));
  SampledFunction back = resample(bs, b.source.grid, true);
  for (long n = -5; n <= 5; ++n)
    CHECK(std::abs(back.value(n) - b.source.value(n)) < 1e-8);

  Grid bad = b.source.grid;
  bad.a = 0.9;
  CHECK_THROWS_AS(resample(b, bad), domain_error);
}

TEST_CASE("in-band plane waves survive resampling to a shifted grid") {
  const double K = M_PI;
  for (double frac : {0.25, 0.5, 0.75}) {
    BandlimitedFunction b = plane_wave(frac * K, 1.0, 300);
    Grid shifted = b.source.grid;
    shifted.theta = 0.41;
    shifted.n_min = -20;
    shifted.n_max = 20;
    SampledFunction out = resample(b, shifted, /*accelerate=*/true);
    for (long n = -10; n <= 10; ++n) {
      const cplx expect = std::exp(cplx(0.0, frac * K * shifted.x(n)));
      CHECK(std::abs(out.value(n) - expect) < 1e-8);
    }
  }
}

TEST_CASE("out-of-band content is not reproduced") {
  const double K = M_PI;
  BandlimitedFunction b = plane_wave(1.1 * K, 1.0, 300);
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = -2.0 + 4.0 * i / 40.0;
    worst = std::max(worst, std::abs(reconstruct(b, x, true) -
                                     std::exp(cplx(0.0, 1.1 * K * x))));
  }
  CHECK(worst > 0.1);  // aliasing must be visible
}

TEST_CASE("shift equivalence is exact for theta2 = theta") {
  SampledFunction s;
  s.grid = Grid{1.0, 0.0, -40, 40};
  for (long n = s.grid.n_min; n <= s.grid.n_max; ++n)
    s.values.push_back(projector_kernel(s.grid.x(n) - 0.1, M_PI));
  BandlimitedFunction b = make_bandlimited(s);
  CHECK(shift_equivalence_check(b, 0.0) < 1e-14);
}
