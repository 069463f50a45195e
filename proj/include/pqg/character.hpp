#pragma once

// The algebraic route to the spectrum: the fixed-point character of the
// rotation flow, its regularized q-expansion, level degeneracies, and the
// direct spectral trace they must agree with.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pqg/phase_space.hpp"

namespace pqg {

class PoleAtFixedTime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients g_m of q^(m + n/2) in the partition-function expansion:
// g_m counts the multi-indices of total degree m.
struct CharacterSeries {
  int n = 1;
  int cutoff = 0;  // highest retained level M
  std::vector<std::int64_t> coeffs;  // g_0 .. g_M

  int offset_num() const { return n; }
  static constexpr int offset_den = 2;
};

std::int64_t binomial(int n, int k);

// Brute-force count of multi-indices with |a| = m.
std::int64_t level_degeneracy_enumerated(int n, int m);

// binomial(m + n - 1, n - 1).
std::int64_t level_degeneracy_closed_form(int n, int m);

// exp(-i n t / 2) / (1 - exp(-i t))^n: half-density weight over the
// symplectic determinant of the displacement at the unique fixed point.
// Throws PoleAtFixedTime within 1e-12 of the degenerate times t in 2 pi Z.
Complex fixed_point_character(Complex t, int n);

// Degeneracies up to level M; enumeration for n <= 4, closed form above.
CharacterSeries character_series(int n, int M);

struct RegularizedCharacter {
  Complex closed;   // q^(n/2) / (1 - q)^n
  Complex partial;  // sum_{m<=M} g_m q^(m + n/2)
};

// Abel-regularized character at q = exp(-eps - i t), |q| < 1.
RegularizedCharacter regularized_character(Complex q, int n, int M);

// Upper bound on |closed - partial| for |q| = q_abs:
// q_abs^(M+1+n/2) * binomial(M+n, n-1) * (1-q_abs)^(-n).
double character_tail_bound(double q_abs, int n, int M);

// Trace of the Wick-substituted evolution operator over all basis states
// with |a| <= M, summed level by level. Agrees with the partial sum of the
// fixed-point expansion.
Complex direct_trace_character(Complex q, int n, int M,
                               const PhaseSpaceConfig& cfg);

}  // namespace pqg
