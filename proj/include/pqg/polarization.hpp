#pragma once

// The holomorphic polarization. States are coefficient vectors over the
// normalized monomial basis z^a / sqrt(a! hbar^|a|); the half-form factor
// sqrt(dz_1 ^ ... ^ dz_n) is never stored, its whole effect being the n/2
// shift of the spectrum and the exp(-i n t / 2) phase of the evolution.

#include <complex>
#include <map>

#include "pqg/intrinsic_algebra.hpp"
#include "pqg/phase_space.hpp"

namespace pqg {

struct PolarizedState {
  int cutoff = 0;
  std::map<MultiIndex, Complex> coeffs;
};

struct EnergyValue {
  double value = 0.0;
};

PolarizedState zero_state(int cutoff);

// Unit coefficient at multi-index a.
PolarizedState basis_state(const MultiIndex& a, int cutoff);

// Diagonal frequency of the evolution on basis vector a: |a| + n/2. The
// eigenvalue of the Hamiltonian is hbar times this.
double mode_frequency(const MultiIndex& a, const PhaseSpaceConfig& cfg);

// H = i hbar L_xi on half-forms: diagonal with eigenvalue
// hbar * (|a| + n/2); the n/2 is the divergence of the rotation field
// acting on the holomorphic volume root.
PolarizedState hamiltonian_apply(const PolarizedState& s,
                                 const PhaseSpaceConfig& cfg);

EnergyValue spectrum(const MultiIndex& a, const PhaseSpaceConfig& cfg);

// d/dt at 0 of det d(exp(-i t) z)/dz by central differences; converges to
// -i*n at second order in the step.
Complex holomorphic_divergence_fd(int n, double step);

// exp(-sum_k |z_k|^2 / (2 hbar)), the scalar profile of the ground state.
Complex ground_state_profile(const ComplexPoint& z,
                             const PhaseSpaceConfig& cfg);

// (d/dzbar_k + z_k/(2 hbar)) psi at z by central differences, for a caller
// supplied profile; returns the residual of largest magnitude over k.
template <class Profile>
Complex annihilation_residual_of(Profile&& psi, const ComplexPoint& z,
                                 double step, const PhaseSpaceConfig& cfg);

// Same, applied to ground_state_profile.
Complex annihilation_residual(const ComplexPoint& z, double step,
                              const PhaseSpaceConfig& cfg);

// U_t: coefficient at a picks up exp(-i (|a| + n/2) t).
PolarizedState evolve(const PolarizedState& s, double t,
                      const PhaseSpaceConfig& cfg);

// Wick-substituted evolution: exp(-i t) -> q, so the coefficient at a is
// multiplied by q^(|a| + n/2) (principal branch).
PolarizedState evolve_wick(const PolarizedState& s, Complex q,
                           const PhaseSpaceConfig& cfg);

// (-1)^n, the phase after one full classical period.
int maslov_phase(int n);

// sum_a conj(s1_a) s2_a; coincides with the Gaussian-measure integral of
// conj(phi1) phi2 when states are expanded in the normalized monomials.
Complex inner_product(const PolarizedState& s1, const PolarizedState& s2,
                      const PhaseSpaceConfig& cfg);

// z^a / sqrt(a! hbar^|a|).
Complex monomial_basis_value(const MultiIndex& a, const ComplexPoint& z,
                             const PhaseSpaceConfig& cfg);

template <class Profile>
Complex annihilation_residual_of(Profile&& psi, const ComplexPoint& z,
                                 double step, const PhaseSpaceConfig& cfg) {
  detail::check_dimension(z.coords.size(), cfg.n, "annihilation_residual");
  if (!(step > 0.0)) throw std::invalid_argument("annihilation_residual: step must be positive");
  Complex worst{0.0, 0.0};
  const Complex center = psi(z);
  for (int k = 0; k < cfg.n; ++k) {
    ComplexPoint p = z;
    auto shifted = [&](Complex delta) {
      p.coords[k] = z.coords[k] + delta;
      return psi(p);
    };
    const Complex dx =
        (shifted(Complex(step, 0.0)) - shifted(Complex(-step, 0.0))) /
        (2.0 * step);
    const Complex dy =
        (shifted(Complex(0.0, step)) - shifted(Complex(0.0, -step))) /
        (2.0 * step);
    // d/dzbar = (d/dx + i d/dy) / 2
    const Complex dbar = 0.5 * (dx + Complex(0.0, 1.0) * dy);
    const Complex residual = dbar + z.coords[k] / (2.0 * cfg.hbar) * center;
    if (std::abs(residual) > std::abs(worst)) worst = residual;
  }
  return worst;
}

}  // namespace pqg
