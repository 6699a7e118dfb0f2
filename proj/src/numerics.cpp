#include "bqm/numerics.hpp"

#include <algorithm>

namespace bqm {

namespace detail {
// Abscissas/weights for 16-point Gauss-Legendre on (-1, 1).
const double gl16_node[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};
const double gl16_weight[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};
}  // namespace detail

double projector_kernel(double dx, double K) {
  if (!std::isfinite(dx) || !std::isfinite(K) || K <= 0.0)
    throw domain_error("projector_kernel: need finite dx and K > 0");
  const double arg = K * dx;
  if (std::fabs(arg) < 1e-8)
    return (K / M_PI) * (1.0 - arg * arg / 6.0);
  return std::sin(arg) / (M_PI * dx);
}

double sine_integral(double x) {
  if (std::isnan(x)) return x;
  if (std::isinf(x)) return x > 0 ? M_PI / 2 : -M_PI / 2;
  const double ax = std::fabs(x);
  double s;
  if (ax < 16.0) {
    // Si(x) = sum_m (-1)^m x^{2m+1} / ((2m+1)(2m+1)!)
    const double x2 = ax * ax;
    double term = ax;  // x^{2m+1}/(2m+1)!
    double sum = ax;
    for (int m = 1; m < 120; ++m) {
      term *= -x2 / ((2.0 * m) * (2.0 * m + 1.0));
      const double contrib = term / (2.0 * m + 1.0);
      sum += contrib;
      if (std::fabs(contrib) < 1e-17 * std::fabs(sum)) break;
    }
    s = sum;
  } else {
    // Si(x) = pi/2 - cos(x) f(x) - sin(x) g(x), truncated at the smallest
    // term of the divergent tail.
    const double inv = 1.0 / ax, inv2 = inv * inv;
    double f = 0.0, g = 0.0;
    double tf = inv;         // (2m)!/x^{2m+1}
    double tg = inv2;        // (2m+1)!/x^{2m+2}
    double sign = 1.0, prev = 1e308;
    for (int m = 0; m < 60; ++m) {
      if (tf > prev) break;
      f += sign * tf;
      g += sign * tg;
      prev = tf;
      tf *= (2.0 * m + 1.0) * (2.0 * m + 2.0) * inv2;
      tg *= (2.0 * m + 2.0) * (2.0 * m + 3.0) * inv2;
      sign = -sign;
    }
    s = M_PI / 2 - std::cos(ax) * f - std::sin(ax) * g;
  }
  return x < 0 ? -s : s;
}

long oscillatory_panel_count(double lo, double hi, double k_max,
                             const QuadSpec& spec) {
  double w = spec.panel_width;
  if (k_max > 0.0) w = std::min(w, M_PI / (4.0 * k_max));
  long n = static_cast<long>(std::ceil((hi - lo) / w));
  return std::max<long>(n, 1);
}

double oscillatory_integrate(const std::function<double(double)>& f, double lo,
                             double hi, double k_max, const QuadSpec& spec) {
  return oscillatory_integrate_t(f, lo, hi, k_max, spec);
}

double bilateral_sum(const std::function<double(long)>& term,
                     const TailSumSpec& spec) {
  if (spec.initial_terms < 1 || spec.initial_terms > spec.max_terms ||
      spec.tail_tol <= 0.0)
    throw domain_error("bilateral_sum: bad TailSumSpec");
  double sum = term(0);
  long n = 1;
  for (; n <= spec.initial_terms; ++n) sum += term(n) + term(-n);
  int quiet = 0;  // consecutive rings below tolerance (sinc rings cross zero)
  double last_ring = 0.0;
  for (; n <= spec.max_terms; ++n) {
    last_ring = term(n) + term(-n);
    sum += last_ring;
    if (std::fabs(last_ring) <
        spec.tail_tol * std::max(1e-300, std::fabs(sum))) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw convergence_error("bilateral_sum: tail tolerance not reached", sum,
                          std::fabs(last_ring));
}

}  // namespace bqm
