#pragma once

// The intrinsic algebra of half-density kernels on the groupoid. Elements
// are finite Fock-coefficient matrices attached to one Fourier mode of the
// fiber. Convolution comes in two backends: exact matrix contraction and a
// literal quadrature of the junction integral, which serve as independent
// cross-checks of each other.
//
// Basis normalization (fixed once, validated by the quadrature backend):
//
//   e_a(z) = (h (pi hbar)^n)^{-1/2} z^a / sqrt(a! hbar^|a|),
//
// and every kernel carries the Gaussian half-density legs
// exp(-(|z|^2 + |z'|^2)/(2 hbar)). At the junction point the two legs merge
// into the Liouville weight exp(-|w|^2/hbar); the constant absorbs the
// global factor h of the convolution and the Gaussian integral (pi hbar)^n,
// so that convolution is exactly matrix multiplication of the coefficients.

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "pqg/phase_space.hpp"

namespace pqg {

using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& a);

// All multi-indices of length n with |a| = degree, lexicographic order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int degree);

// All multi-indices with |a| <= max_total, ordered by degree then lex.
std::vector<MultiIndex> multi_indices_up_to(int n, int max_total);

struct AlgebraElement {
  int n = 1;
  double hbar = 1.0;
  int cutoff = 0;
  int mode = 1;
  std::map<std::pair<MultiIndex, MultiIndex>, Complex> coeffs;

  Complex at(const MultiIndex& a, const MultiIndex& b) const;

  // Same coefficients re-labelled with another fiber mode. Hermiticity
  // checks use this to keep adjoint(A) composable with A at fixed mode.
  AlgebraElement with_mode(int new_mode) const;
};

AlgebraElement zero_element(const PhaseSpaceConfig& cfg, int cutoff,
                            int mode = 1);

// Single-coefficient element C_ab = 1.
AlgebraElement matrix_unit(const MultiIndex& a, const MultiIndex& b,
                           const PhaseSpaceConfig& cfg, int cutoff,
                           int mode = 1);

// Fock-matrix contraction (C_A C_B)_{ab} = sum_c A_{ac} B_{cb}; realizes
// h * integral K_A(z,w) K_B(w,z') vol(w) under the basis normalization
// above. Result cutoff is the smaller of the two inputs.
AlgebraElement convolve(const AlgebraElement& A, const AlgebraElement& B);

// The junction integral evaluated literally: pointwise kernel products
// integrated against vol over the grid (global factor h included), then
// re-expanded in the Fock basis by quadrature projection. Requires
// grid.order >= 2*cutoff + 4.
AlgebraElement convolve_quadrature(const AlgebraElement& A,
                                   const AlgebraElement& B,
                                   const QuadratureGrid& grid);

// C_ab -> conj(C_ba), mode -> -mode.
AlgebraElement adjoint(const AlgebraElement& A);

// Diagonal coefficient sum; equals the diagonal kernel integral over X
// times the normalization constant h.
Complex kernel_trace(const AlgebraElement& A);

// Fiber integral over one period: h * kernel_trace for mode 0, zero for
// every other mode (the full-period oscillation integrates away).
Complex fiber_integrated_trace(const AlgebraElement& A);

// K(z, z') = sum_{a,b} C_ab e_a(z) conj(e_b(z')) exp(-(|z|^2+|z'|^2)/(2 hbar)).
Complex kernel_value(const AlgebraElement& A, const ComplexPoint& z,
                     const ComplexPoint& z_prime);

// e_a(z) as defined above.
Complex fock_basis_value(const MultiIndex& a, const ComplexPoint& z,
                         const PhaseSpaceConfig& cfg);

// e_a(z) times the Gaussian half-density leg exp(-|z|^2/(2 hbar)).
Complex dressed_basis_value(const MultiIndex& a, const ComplexPoint& z,
                            const PhaseSpaceConfig& cfg);

// Largest entrywise coefficient difference over the union of supports.
double max_abs_diff(const AlgebraElement& A, const AlgebraElement& B);

}  // namespace pqg
