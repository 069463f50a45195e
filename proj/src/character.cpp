#include "pqg/character.hpp"

#include <cmath>

#include "pqg/polarization.hpp"

namespace pqg {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: product of i consecutive
  }                                     // integers is divisible by i!
  return result;
}

std::int64_t level_degeneracy_enumerated(int n, int m) {
  return static_cast<std::int64_t>(multi_indices_of_degree(n, m).size());
}

std::int64_t level_degeneracy_closed_form(int n, int m) {
  return binomial(m + n - 1, n - 1);
}

Complex fixed_point_character(Complex t, int n) {
  if (n < 1) throw std::invalid_argument("fixed_point_character: n must be >= 1");
  const Complex rotation = std::exp(Complex(0.0, -1.0) * t);
  const Complex displacement = Complex{1.0, 0.0} - rotation;
  if (std::abs(displacement) <= 1e-12)
    throw PoleAtFixedTime("fixed_point_character: fixed point degenerates at t in 2*pi*Z");
  const Complex numerator = std::exp(Complex(0.0, -0.5 * n) * t);
  Complex denominator{1.0, 0.0};
  for (int k = 0; k < n; ++k) denominator *= displacement;
  return numerator / denominator;
}

CharacterSeries character_series(int n, int M) {
  if (n < 1 || M < 0) throw std::invalid_argument("character_series: bad arguments");
  CharacterSeries s;
  s.n = n;
  s.cutoff = M;
  s.coeffs.reserve(M + 1);
  for (int m = 0; m <= M; ++m)
    s.coeffs.push_back(n <= 4 ? level_degeneracy_enumerated(n, m)
                              : level_degeneracy_closed_form(n, m));
  return s;
}

RegularizedCharacter regularized_character(Complex q, int n, int M) {
  if (std::abs(q) >= 1.0)
    throw std::invalid_argument("regularized_character: |q| must be < 1");
  if (n < 1 || M < 1)
    throw std::invalid_argument("regularized_character: need n >= 1, M >= 1");

  const Complex q_half_n =
      (q == Complex{0.0, 0.0}) ? Complex{0.0, 0.0}
                               : std::pow(q, 0.5 * static_cast<double>(n));
  Complex denominator{1.0, 0.0};
  for (int k = 0; k < n; ++k) denominator *= (Complex{1.0, 0.0} - q);

  const CharacterSeries series = character_series(n, M);
  Complex partial{0.0, 0.0};
  Complex q_pow = q_half_n;  // q^(m + n/2), starting at m = 0
  for (int m = 0; m <= M; ++m) {
    partial += static_cast<double>(series.coeffs[m]) * q_pow;
    q_pow *= q;
  }
  return {q_half_n / denominator, partial};
}

double character_tail_bound(double q_abs, int n, int M) {
  if (!(q_abs >= 0.0 && q_abs < 1.0))
    throw std::invalid_argument("character_tail_bound: need 0 <= |q| < 1");
  return std::pow(q_abs, M + 1 + 0.5 * n) *
         static_cast<double>(binomial(M + n, n - 1)) *
         std::pow(1.0 - q_abs, -n);
}

Complex direct_trace_character(Complex q, int n, int M,
                               const PhaseSpaceConfig& cfg) {
  if (cfg.n != n)
    throw std::invalid_argument("direct_trace_character: dimension mismatch");
  if (std::abs(q) >= 1.0)
    throw std::invalid_argument("direct_trace_character: |q| must be < 1");
  if (M < 0) throw std::invalid_argument("direct_trace_character: M must be >= 0");

  // Diagonal of the Wick-substituted evolution operator, accumulated level
  // by level so the truncation matches the series expansion term for term.
  Complex total{0.0, 0.0};
  for (int m = 0; m <= M; ++m) {
    Complex level{0.0, 0.0};
    for (const auto& a : multi_indices_of_degree(n, m)) {
      const PolarizedState evolved = evolve_wick(basis_state(a, M), q, cfg);
      level += evolved.coeffs.at(a);
    }
    total += level;
  }
  return total;
}

}  // namespace pqg
