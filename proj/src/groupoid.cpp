#include "pqg/groupoid.hpp"

#include <cmath>

namespace pqg {

double mod_period(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;  // fmod/add can land exactly on the period
  return r;
}

Arrow make_arrow(ComplexPoint source, double action, ComplexPoint target,
                 const PhaseSpaceConfig& cfg) {
  detail::check_dimension(source.coords.size(), cfg.n, "make_arrow");
  detail::check_dimension(target.coords.size(), cfg.n, "make_arrow");
  return Arrow{std::move(source), mod_period(action, cfg.h),
               std::move(target)};
}

Arrow unit_arrow(const ComplexPoint& z, const PhaseSpaceConfig& cfg) {
  return make_arrow(z, 0.0, z, cfg);
}

Arrow compose(const Arrow& a, const Arrow& b, const PhaseSpaceConfig& cfg,
              double tol) {
  if (distance(a.target, b.source) >= tol)
    throw NotComposable("compose: target of the first arrow does not match source of the second");
  return make_arrow(a.source, a.action + b.action, b.target, cfg);
}

Arrow invert(const Arrow& a, const PhaseSpaceConfig& cfg) {
  return make_arrow(a.target, -a.action, a.source, cfg);
}

double lambda_eval(const Arrow& y, const ArrowTangent& v,
                   const PhaseSpaceConfig& cfg) {
  return primitive_alpha(y.target, v.du_prime, cfg) -
         primitive_alpha(y.source, v.du, cfg) - v.ds;
}

Arrow lifted_rotation(double s, const Arrow& y) {
  return Arrow{rotated(y.source, s), y.action, rotated(y.target, s)};
}

}  // namespace pqg
