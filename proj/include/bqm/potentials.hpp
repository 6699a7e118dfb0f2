#pragma once

#include <functional>

#include "bqm/maxloc.hpp"
#include "bqm/sampling.hpp"

namespace bqm {

struct PotentialSpec {
  enum class Kind { delta, step, user };
  Kind kind = Kind::delta;
  double V0 = 1.0;                       // strength / height
  std::function<double(double)> user_fn;  // required for Kind::user
  double L_feature = 0.0;                // optional feature scale (unused by delta/step)

  void validate() const {
    if (!std::isfinite(V0)) throw domain_error("PotentialSpec: V0 not finite");
    if (kind == Kind::user && !user_fn)
      throw domain_error("PotentialSpec: user kind needs user_fn");
  }
};

// Maxloc-smeared observation V_n = <phi_{x_n}| V |phi_{x_n}>.
// delta uses the closed form; step uses the r_n integral; user integrates
// V |phi|^2 directly.
SampledFunction sample_potential(const PotentialSpec& p, const Grid& g);

// The smeared delta as a continuous function of the observation center:
// (V0 a^2/2) [Pi(x - a/2) + Pi(x + a/2)]^2.
double delta_smeared_continuous(double V0, double a, double x);

// Closed-form bandlimited reconstruction of the smeared delta.  The formula
// is 0/0 at x = +-a/2; a Taylor branch (precomputed symbolic limit) covers
// |x -+ a/2| < 0.05 a.
double delta_reconstructed_closed_form(double V0, double a, double x);

// V0 (1/2 - Si(Kx)/pi): the analytic bandlimited step profile.
double step_reconstruction_analytic(double V0, double K, double x);

// r(x) = \int_0^x |phi_0|^2 for the maxloc state centered at 0 (spacing a);
// the step samples are V0 (1/2 - r(x_n)).
double step_maxloc_r(double a, double x);

// The observation pipeline: project the potential onto the band and sample
// on g, returning the canonical bandlimited representation.  For delta the
// smeared potential is projected by independent quadrature; for step the
// projected profile is integrated segment by segment; user potentials are
// sampled directly (exact projection when the input is already in-band).
BandlimitedFunction observe_and_reconstruct(const PotentialSpec& p, const Grid& g);

}  // namespace bqm
