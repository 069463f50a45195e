#include "pqg/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pqg {

PhaseSpaceConfig::PhaseSpaceConfig(int n_, double hbar_)
    : n(n_), hbar(hbar_), h(2.0 * std::numbers::pi * hbar_) {
  if (n < 1) throw std::invalid_argument("PhaseSpaceConfig: n must be >= 1");
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw std::invalid_argument("PhaseSpaceConfig: hbar must be positive and finite");
}

namespace detail {

void check_dimension(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

double real_part_checked(const Complex& value, const char* what) {
  if (std::abs(value.imag()) >= 1e-14)
    throw std::logic_error(std::string(what) + ": value is not real");
  return value.real();
}

namespace {

// phi_k are the orthonormal Hermite functions p_k(x) exp(-x^2/2); running
// the recurrence on them keeps every intermediate bounded at any order.
struct HermiteEval {
  double phi_n;          // phi_order(x)
  double dphi_n;         // phi_order'(x)
  double sum_sq_below;   // sum_{k < order} phi_k(x)^2
};

HermiteEval hermite_function_eval(int order, double x) {
  const double pi_m4 = std::pow(std::numbers::pi, -0.25);
  double phi_prev = 0.0;
  double phi = pi_m4 * std::exp(-0.5 * x * x);
  double sum = 0.0;
  for (int k = 0; k < order; ++k) {
    sum += phi * phi;
    const double next = x * std::sqrt(2.0 / (k + 1.0)) * phi -
                        std::sqrt(static_cast<double>(k) / (k + 1.0)) * phi_prev;
    phi_prev = phi;
    phi = next;
  }
  return {phi, std::sqrt(2.0 * order) * phi_prev - x * phi, sum};
}

}  // namespace

void hermite_lebesgue_rule(int order, double hbar, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);

  const int half = (order + 1) / 2;
  std::vector<double> roots;  // positive roots, descending
  roots.reserve(half);
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if ((order % 2 == 1) && i == half - 1) {
      z = 0.0;  // middle root of the odd rule, exact by symmetry
    } else {
      if (i == 0)
        z = std::sqrt(2.0 * order + 1.0) -
            1.85575 * std::pow(2.0 * order + 1.0, -1.0 / 6.0);
      else if (i == 1)
        z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
      else if (i == 2)
        z = 1.86 * z - 0.86 * roots[0];
      else if (i == 3)
        z = 1.91 * z - 0.91 * roots[1];
      else
        z = 2.0 * z - roots[i - 2];
      for (int it = 0; it < 100; ++it) {
        const HermiteEval e = hermite_function_eval(order, z);
        const double dz = e.phi_n / e.dphi_n;
        z -= dz;
        if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
      }
    }
    roots.push_back(z);
  }
  for (int i = 0; i + 1 < half; ++i)
    if (!(roots[i] > roots[i + 1] + 1e-10))
      throw std::logic_error("hermite_lebesgue_rule: root search collapsed");

  const double s = std::sqrt(hbar);
  for (int i = 0; i < half; ++i) {
    const double r = roots[i];
    // Christoffel weight with the Gaussian folded out: the Lebesgue weight
    // for integrands that carry exp(-x^2/hbar) themselves.
    const double w = s / hermite_function_eval(order, r).sum_sq_below;
    nodes[order - 1 - i] = s * r;
    nodes[i] = -s * r;
    weights[order - 1 - i] = w;
    weights[i] = w;
  }
}

}  // namespace detail

double symplectic_form(const TangentVector& u, const TangentVector& v,
                       const PhaseSpaceConfig& cfg) {
  detail::check_dimension(u.coords.size(), cfg.n, "symplectic_form");
  detail::check_dimension(v.coords.size(), cfg.n, "symplectic_form");
  Complex sum{0.0, 0.0};
  for (int k = 0; k < cfg.n; ++k)
    sum += u.coords[k] * std::conj(v.coords[k]) -
           v.coords[k] * std::conj(u.coords[k]);
  return detail::real_part_checked(Complex(0.0, 0.5) * sum, "symplectic_form");
}

double primitive_alpha(const ComplexPoint& z, const TangentVector& u,
                       const PhaseSpaceConfig& cfg) {
  detail::check_dimension(z.coords.size(), cfg.n, "primitive_alpha");
  detail::check_dimension(u.coords.size(), cfg.n, "primitive_alpha");
  Complex sum{0.0, 0.0};
  for (int k = 0; k < cfg.n; ++k)
    sum += std::conj(z.coords[k]) * u.coords[k] -
           z.coords[k] * std::conj(u.coords[k]);
  return detail::real_part_checked(Complex(0.0, 0.25) * sum,
                                   "primitive_alpha");
}

double exterior_derivative_check(const ComplexPoint& z, const TangentVector& u,
                                 const TangentVector& v, double step,
                                 const PhaseSpaceConfig& cfg) {
  if (!(step > 0.0))
    throw std::invalid_argument("exterior_derivative_check: step must be positive");
  // For constant fields d(alpha)(u,v) = D_u[alpha(.,v)] - D_v[alpha(.,u)].
  auto directional = [&](const TangentVector& dir, const TangentVector& arg) {
    return (primitive_alpha(displaced(z, dir, step), arg, cfg) -
            primitive_alpha(displaced(z, dir, -step), arg, cfg)) /
           (2.0 * step);
  };
  return directional(u, v) - directional(v, u);
}

QuadratureGrid build_quadrature(const PhaseSpaceConfig& cfg, int order,
                                std::size_t node_cap) {
  if (order < 2)
    throw std::invalid_argument("build_quadrature: order must be >= 2");
  const int axes = 2 * cfg.n;
  double count = 1.0;
  for (int a = 0; a < axes; ++a) count *= order;
  if (count > static_cast<double>(node_cap))
    throw std::invalid_argument(
        "build_quadrature: node count order^(2n) exceeds the cap");

  std::vector<double> x, w;
  detail::hermite_lebesgue_rule(order, cfg.hbar, x, w);

  QuadratureGrid grid;
  grid.n = cfg.n;
  grid.hbar = cfg.hbar;
  grid.order = order;
  const std::size_t total = static_cast<std::size_t>(count);
  grid.nodes.reserve(total);
  grid.weights.reserve(total);

  std::vector<int> idx(axes, 0);
  for (;;) {
    ComplexPoint p;
    p.coords.resize(cfg.n);
    double weight = 1.0;
    for (int k = 0; k < cfg.n; ++k) {
      const int ix = idx[2 * k];
      const int iy = idx[2 * k + 1];
      p.coords[k] = Complex(x[ix], x[iy]);
      weight *= w[ix] * w[iy];
    }
    grid.nodes.push_back(std::move(p));
    grid.weights.push_back(weight);

    int a = 0;
    for (; a < axes; ++a) {
      if (++idx[a] < order) break;
      idx[a] = 0;
    }
    if (a == axes) break;
  }
  return grid;
}

ComplexPoint displaced(const ComplexPoint& z, const TangentVector& u,
                       double s) {
  ComplexPoint out = z;
  for (std::size_t k = 0; k < out.coords.size() && k < u.coords.size(); ++k)
    out.coords[k] += s * u.coords[k];
  return out;
}

double norm_squared(const ComplexPoint& z) {
  double sum = 0.0;
  for (const auto& c : z.coords) sum += std::norm(c);
  return sum;
}

ComplexPoint rotated(const ComplexPoint& z, double s) {
  const Complex phase = std::exp(Complex(0.0, -s));
  ComplexPoint out = z;
  for (auto& c : out.coords) c *= phase;
  return out;
}

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.coords.size(); ++k)
    sum += std::norm(a.coords[k] - b.coords[k]);
  return std::sqrt(sum);
}

}  // namespace pqg
