#pragma once

// Complexified phase space X = C^n: the standard area form, its
// rotation-invariant primitive, and Gauss-Hermite product grids that
// integrate (polynomial) * exp(-|z|^2/hbar) against the Liouville volume.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pqg {

using Complex = std::complex<double>;

// Global parameters of a run: complex dimension n, the action scale hbar,
// and the fiber period h = 2*pi*hbar.
struct PhaseSpaceConfig {
  int n;
  double hbar;
  double h;

  PhaseSpaceConfig(int n_, double hbar_);
};

// A point of X = C^n.
struct ComplexPoint {
  std::vector<Complex> coords;
};

// A real tangent vector encoded by its holomorphic components u_k; the
// anti-holomorphic components are the conjugates.
struct TangentVector {
  std::vector<Complex> coords;
};

// omega(u, v) = (i/2) sum_k (u_k conj(v_k) - v_k conj(u_k)). Bilinear,
// antisymmetric, and real; the imaginary part is asserted away.
double symplectic_form(const TangentVector& u, const TangentVector& v,
                       const PhaseSpaceConfig& cfg);

// alpha_z(u) = (i/4) sum_k (conj(z_k) u_k - z_k conj(u_k)), the primitive
// of omega invariant under diagonal unitary rotations.
double primitive_alpha(const ComplexPoint& z, const TangentVector& u,
                       const PhaseSpaceConfig& cfg);

// Central-difference evaluation of d(alpha)(u, v) at z for constant fields
// u, v. Approximates symplectic_form(u, v) with error O(step^2).
double exterior_derivative_check(const ComplexPoint& z, const TangentVector& u,
                                 const TangentVector& v, double step,
                                 const PhaseSpaceConfig& cfg);

// Tensor-product Gauss-Hermite grid over R^{2n} (real and imaginary part of
// each z_k). Weights are plain Lebesgue weights: the Gaussian factor
// exp(-|z|^2/hbar) stays inside the integrand, and the rule is then exact
// for polynomial factors of degree <= 2*order-1 per real axis.
struct QuadratureGrid {
  int n = 0;
  double hbar = 0.0;
  int order = 0;
  std::vector<ComplexPoint> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

QuadratureGrid build_quadrature(const PhaseSpaceConfig& cfg, int order,
                                std::size_t node_cap = kDefaultNodeCap);

template <class F>
auto integrate(const QuadratureGrid& grid, F&& f) {
  using Result = decltype(f(grid.nodes[0]));
  Result acc{};
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    acc += grid.weights[i] * f(grid.nodes[i]);
  return acc;
}

// z + s*u, the straight-line displacement used by finite-difference checks.
ComplexPoint displaced(const ComplexPoint& z, const TangentVector& u,
                       double s);

// sum_k |z_k|^2
double norm_squared(const ComplexPoint& z);

// Componentwise rotation z -> exp(-i*s) z.
ComplexPoint rotated(const ComplexPoint& z, double s);

double distance(const ComplexPoint& a, const ComplexPoint& b);

namespace detail {

// Nodes and Lebesgue weights of the one-axis rule for weight exp(-x^2/hbar).
void hermite_lebesgue_rule(int order, double hbar, std::vector<double>& nodes,
                           std::vector<double>& weights);

void check_dimension(std::size_t got, int n, const char* what);

double real_part_checked(const Complex& value, const char* what);

}  // namespace detail

}  // namespace pqg
