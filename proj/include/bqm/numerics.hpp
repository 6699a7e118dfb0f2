#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqm {

// Quadrature control for the oscillatory integrator.  panel_width is a hard
// cap; the effective width is further reduced so that no panel spans more
// than a quarter oscillation of the fastest mode present.
struct QuadSpec {
  double panel_width = 0.25;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  long max_panels = 1 << 22;
};

// Truncation control for bilateral (n in Z) sums.
struct TailSumSpec {
  long initial_terms = 50;
  double tail_tol = 1e-10;  // relative to the running sum
  long max_terms = 2000000;
};

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative scheme stops without meeting its tolerance; the
// best estimate and the achieved error bound ride along.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, double best, double bound)
      : std::runtime_error(msg), best_estimate(best), error_bound(bound) {}
  double best_estimate;
  double error_bound;
};

// sin(K dx) / (pi dx), with the removable singularity filled in at dx = 0.
double projector_kernel(double dx, double K);

// Si(x) = \int_0^x sin(u)/u du.  Power series for |x| < 16, asymptotic
// expansion beyond; odd in x.
double sine_integral(double x);

namespace detail {
extern const double gl16_node[16];    // Gauss-Legendre nodes on (-1, 1)
extern const double gl16_weight[16];
}  // namespace detail

// 16-point Gauss-Legendre rule on [a, b]; works for real or complex f.
template <class F>
auto gl16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  using R = decltype(f(mid));
  R acc = R(0);
  for (int i = 0; i < 16; ++i)
    acc += detail::gl16_weight[i] * f(mid + half * detail::gl16_node[i]);
  return acc * half;
}

long oscillatory_panel_count(double lo, double hi, double k_max,
                             const QuadSpec& spec);

namespace detail {
template <class F>
auto panel_sum(F&& f, double lo, double hi, long n) {
  using R = decltype(f(lo));
  const double w = (hi - lo) / static_cast<double>(n);
  R acc = R(0);
  for (long i = 0; i < n; ++i)
    acc += gl16(f, lo + i * w, lo + (i + 1) * w);
  return acc;
}
}  // namespace detail

// Composite GL16 quadrature with panels capped at min(spec.panel_width,
// pi/(4 k_max)).  The panel count is doubled until two consecutive passes
// agree to tolerance; failure raises convergence_error with the best value.
template <class F>
auto oscillatory_integrate_t(F&& f, double lo, double hi, double k_max,
                             const QuadSpec& spec = {}) {
  using R = decltype(f(lo));
  if (!(lo <= hi)) throw domain_error("oscillatory_integrate: lo > hi");
  if (lo == hi) return R(0);
  long n = oscillatory_panel_count(lo, hi, k_max, spec);
  R coarse = detail::panel_sum(f, lo, hi, n);
  while (2 * n <= spec.max_panels) {
    R fine = detail::panel_sum(f, lo, hi, 2 * n);
    const double diff = std::abs(fine - coarse);
    if (diff <= spec.abs_tol || diff <= spec.rel_tol * std::abs(fine))
      return fine;
    coarse = fine;
    n *= 2;
  }
  throw convergence_error("oscillatory_integrate: panel budget exhausted",
                          std::abs(coarse), std::abs(coarse) * spec.rel_tol);
}

double oscillatory_integrate(const std::function<double(double)>& f, double lo,
                             double hi, double k_max, const QuadSpec& spec = {});

// Sums term(0) + sum_{n>=1} [term(n) + term(-n)], growing the window until
// two consecutive rings fall below tail_tol relative to the running sum.
double bilateral_sum(const std::function<double(long)>& term,
                     const TailSumSpec& spec = {});

// Wynn epsilon acceleration: limit estimate from a sequence of partial sums.
// Returns the even-column entry where the column-to-column movement is
// smallest; deep columns can turn unstable (notably for monotone
// logarithmically convergent input), so "deepest" is not "best".
template <class T>
T wynn_limit(const std::vector<T>& s, double* movement = nullptr) {
  if (movement) *movement = 0.0;
  if (s.empty()) return T(0);
  std::vector<T> prev(s.size() + 1, T(0));  // epsilon_{-1} row
  std::vector<T> cur = s;                   // epsilon_0 row
  // the raw tail competes on its own final movement: epsilon columns win
  // only where they are more settled than the unaccelerated sequence
  T best = s.back();
  T last_even = s.back();
  double best_move =
      s.size() > 1 ? std::abs(s[s.size() - 1] - s[s.size() - 2]) : 0.0;
  bool have_move = s.size() > 1;
  for (int col = 1; cur.size() > 1; ++col) {
    std::vector<T> next(cur.size() - 1);
    bool healthy = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const T d = cur[i + 1] - cur[i];
      if (std::abs(d) < 1e-300) {
        healthy = false;
        break;
      }
      next[i] = prev[i + 1] + T(1) / d;
    }
    if (!healthy) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0) {
      const T cand = cur.back();
      const double move = std::abs(cand - last_even);
      if (!have_move || move < best_move) {
        best_move = move;
        best = cand;
        have_move = true;
      }
      last_even = cand;
    }
  }
  if (movement) *movement = have_move ? best_move : 0.0;
  return best;
}

// Polynomial extrapolation in 1/r of ring partial sums S[0..R] to R -> inf,
// sampled at geometrically spaced radii so the Neville table stays well
// conditioned.  This is the right tool for monotone O(1/r) tails, where the
// epsilon algorithm stalls; movement reports the change from adding the
// coarsest node, an honest error gauge for the extrapolation.
template <class T>
T richardson_limit(const std::vector<T>& s, double* movement = nullptr) {
  const long R = static_cast<long>(s.size()) - 1;
  if (R < 8) {
    if (movement) *movement = std::abs(s.back());
    return s.back();
  }
  const long rs[4] = {R, R / 2, R / 4, R / 8};
  double t[4];
  T p[4];
  for (int i = 0; i < 4; ++i) {
    t[i] = 1.0 / static_cast<double>(rs[i]);
    p[i] = s[static_cast<std::size_t>(rs[i])];
  }
  T diag_prev = p[0];
  double move = std::abs(s.back());
  for (int col = 1; col < 4; ++col) {
    for (int i = 3; i >= col; --i)
      p[i] = p[i] + (p[i] - p[i - 1]) * (t[i] / (t[i - col] - t[i]));
    move = std::abs(p[col] - diag_prev);
    diag_prev = p[col];
  }
  if (movement) *movement = move;
  return p[3];
}

}  // namespace bqm
