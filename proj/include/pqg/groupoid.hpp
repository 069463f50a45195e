#pragma once

// The morphism space of the prequantum groupoid over C^n: arrows
// (source, action mod h, target), additive composition, inversion, the
// prequantum 1-form lambda, and the lifted rotation action.

#include <stdexcept>

#include "pqg/phase_space.hpp"

namespace pqg {

// An arrow (z, t, z'): a path from source z to target z' with relative
// action t, stored as its canonical representative in [0, h).
struct Arrow {
  ComplexPoint source;
  double action = 0.0;
  ComplexPoint target;
};

// Tangent data at an arrow: a vector at the source, a fiber component, and
// a vector at the target.
struct ArrowTangent {
  TangentVector du;
  double ds = 0.0;
  TangentVector du_prime;
};

class NotComposable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical representative of t modulo period in [0, period).
double mod_period(double t, double period);

Arrow make_arrow(ComplexPoint source, double action, ComplexPoint target,
                 const PhaseSpaceConfig& cfg);

Arrow unit_arrow(const ComplexPoint& z, const PhaseSpaceConfig& cfg);

// (z, t, w) . (w, t', v) = (z, t + t' mod h, v). Throws NotComposable when
// the junction endpoints differ by more than tol.
Arrow compose(const Arrow& a, const Arrow& b, const PhaseSpaceConfig& cfg,
              double tol = 1e-12);

// (z, t, w) -> (w, -t mod h, z); composing an arrow with its inverse gives
// the unit arrow at its source.
Arrow invert(const Arrow& a, const PhaseSpaceConfig& cfg);

// lambda = pr3*(alpha) - pr1*(alpha) - pr2*(dt) evaluated on tangent data.
double lambda_eval(const Arrow& y, const ArrowTangent& v,
                   const PhaseSpaceConfig& cfg);

// Lift of the rotation flow: both endpoints rotate by exp(-i*s), the action
// coordinate is untouched.
Arrow lifted_rotation(double s, const Arrow& y);

}  // namespace pqg
