#include "pqg/polarization.hpp"

#include <cmath>

namespace pqg {

PolarizedState zero_state(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("zero_state: cutoff must be >= 0");
  return PolarizedState{cutoff, {}};
}

PolarizedState basis_state(const MultiIndex& a, int cutoff) {
  if (total_degree(a) > cutoff)
    throw std::invalid_argument("basis_state: cutoff exceeded");
  PolarizedState s = zero_state(cutoff);
  s.coeffs[a] = Complex{1.0, 0.0};
  return s;
}

double mode_frequency(const MultiIndex& a, const PhaseSpaceConfig& cfg) {
  detail::check_dimension(a.size(), cfg.n, "mode_frequency");
  return total_degree(a) + 0.5 * cfg.n;
}

PolarizedState hamiltonian_apply(const PolarizedState& s,
                                 const PhaseSpaceConfig& cfg) {
  PolarizedState out = s;
  for (auto& [a, value] : out.coeffs)
    value *= cfg.hbar * mode_frequency(a, cfg);
  return out;
}

EnergyValue spectrum(const MultiIndex& a, const PhaseSpaceConfig& cfg) {
  return EnergyValue{cfg.hbar * mode_frequency(a, cfg)};
}

Complex holomorphic_divergence_fd(int n, double step) {
  if (n < 1) throw std::invalid_argument("holomorphic_divergence_fd: n must be >= 1");
  if (!(step > 0.0 && step <= 1e-2))
    throw std::invalid_argument("holomorphic_divergence_fd: step must be in (0, 1e-2]");
  auto flow_jacobian_det = [n](double t) {
    // d(exp(-i t) z)/dz is exp(-i t) times the identity.
    const Complex diag = std::exp(Complex(0.0, -t));
    Complex det{1.0, 0.0};
    for (int k = 0; k < n; ++k) det *= diag;
    return det;
  };
  return (flow_jacobian_det(step) - flow_jacobian_det(-step)) / (2.0 * step);
}

Complex ground_state_profile(const ComplexPoint& z,
                             const PhaseSpaceConfig& cfg) {
  detail::check_dimension(z.coords.size(), cfg.n, "ground_state_profile");
  double norm2 = 0.0;
  for (const auto& c : z.coords) norm2 += std::norm(c);
  return {std::exp(-norm2 / (2.0 * cfg.hbar)), 0.0};
}

Complex annihilation_residual(const ComplexPoint& z, double step,
                              const PhaseSpaceConfig& cfg) {
  return annihilation_residual_of(
      [&cfg](const ComplexPoint& p) { return ground_state_profile(p, cfg); },
      z, step, cfg);
}

PolarizedState evolve(const PolarizedState& s, double t,
                      const PhaseSpaceConfig& cfg) {
  PolarizedState out = s;
  for (auto& [a, value] : out.coeffs)
    value *= std::exp(Complex(0.0, -mode_frequency(a, cfg) * t));
  return out;
}

PolarizedState evolve_wick(const PolarizedState& s, Complex q,
                           const PhaseSpaceConfig& cfg) {
  PolarizedState out = s;
  for (auto& [a, value] : out.coeffs)
    value *= std::pow(q, mode_frequency(a, cfg));
  return out;
}

int maslov_phase(int n) {
  if (n < 1) throw std::invalid_argument("maslov_phase: n must be >= 1");
  return (n % 2 == 0) ? 1 : -1;
}

Complex inner_product(const PolarizedState& s1, const PolarizedState& s2,
                      const PhaseSpaceConfig& cfg) {
  if (s1.cutoff != s2.cutoff)
    throw std::invalid_argument("inner_product: cutoff mismatch");
  Complex sum{0.0, 0.0};
  for (const auto& [a, value] : s1.coeffs) {
    detail::check_dimension(a.size(), cfg.n, "inner_product");
    auto it = s2.coeffs.find(a);
    if (it != s2.coeffs.end()) sum += std::conj(value) * it->second;
  }
  return sum;
}

Complex monomial_basis_value(const MultiIndex& a, const ComplexPoint& z,
                             const PhaseSpaceConfig& cfg) {
  detail::check_dimension(a.size(), cfg.n, "monomial_basis_value");
  detail::check_dimension(z.coords.size(), cfg.n, "monomial_basis_value");
  Complex value{1.0, 0.0};
  for (int k = 0; k < cfg.n; ++k) {
    Complex mono{1.0, 0.0};
    double fact = 1.0;
    for (int p = 1; p <= a[k]; ++p) {
      mono *= z.coords[k];
      fact *= p * cfg.hbar;
    }
    value *= mono / std::sqrt(fact);
  }
  return value;
}

}  // namespace pqg
