#include "pqg/intrinsic_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace pqg {

int total_degree(const MultiIndex& a) {
  int sum = 0;
  for (int e : a) sum += e;
  return sum;
}

namespace {

void append_indices(int n, int degree, MultiIndex& prefix,
                    std::vector<MultiIndex>& out) {
  if (n == 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= degree; ++first) {
    prefix.push_back(first);
    append_indices(n - 1, degree - first, prefix, out);
    prefix.pop_back();
  }
}

void check_index(const MultiIndex& a, int n, int cutoff, const char* what) {
  if (a.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string(what) + ": multi-index length mismatch");
  for (int e : a)
    if (e < 0)
      throw std::invalid_argument(std::string(what) + ": negative multi-index entry");
  if (total_degree(a) > cutoff)
    throw std::invalid_argument(std::string(what) + ": cutoff exceeded");
}

void check_compatible(const AlgebraElement& A, const AlgebraElement& B,
                      const char* what) {
  if (A.n != B.n || A.hbar != B.hbar)
    throw std::invalid_argument(std::string(what) + ": incompatible configs");
  if (A.mode != B.mode)
    throw std::invalid_argument(std::string(what) + ": incompatible fiber modes");
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int degree) {
  if (n < 1 || degree < 0)
    throw std::invalid_argument("multi_indices_of_degree: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex prefix;
  prefix.reserve(n);
  append_indices(n, degree, prefix, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int max_total) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= max_total; ++m) {
    auto level = multi_indices_of_degree(n, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Complex AlgebraElement::at(const MultiIndex& a, const MultiIndex& b) const {
  auto it = coeffs.find({a, b});
  return it == coeffs.end() ? Complex{0.0, 0.0} : it->second;
}

AlgebraElement AlgebraElement::with_mode(int new_mode) const {
  AlgebraElement out = *this;
  out.mode = new_mode;
  return out;
}

AlgebraElement zero_element(const PhaseSpaceConfig& cfg, int cutoff,
                            int mode) {
  if (cutoff < 0) throw std::invalid_argument("zero_element: cutoff must be >= 0");
  AlgebraElement e;
  e.n = cfg.n;
  e.hbar = cfg.hbar;
  e.cutoff = cutoff;
  e.mode = mode;
  return e;
}

AlgebraElement matrix_unit(const MultiIndex& a, const MultiIndex& b,
                           const PhaseSpaceConfig& cfg, int cutoff, int mode) {
  check_index(a, cfg.n, cutoff, "matrix_unit");
  check_index(b, cfg.n, cutoff, "matrix_unit");
  AlgebraElement e = zero_element(cfg, cutoff, mode);
  e.coeffs[{a, b}] = Complex{1.0, 0.0};
  return e;
}

AlgebraElement convolve(const AlgebraElement& A, const AlgebraElement& B) {
  check_compatible(A, B, "convolve");
  AlgebraElement out;
  out.n = A.n;
  out.hbar = A.hbar;
  out.cutoff = std::min(A.cutoff, B.cutoff);
  out.mode = A.mode;

  // Contraction over the intermediate index: rows of B keyed by it.
  std::map<MultiIndex, std::vector<std::pair<MultiIndex, Complex>>> rows;
  for (const auto& [key, value] : B.coeffs) {
    if (total_degree(key.second) > out.cutoff) continue;
    rows[key.first].push_back({key.second, value});
  }
  for (const auto& [key, value] : A.coeffs) {
    const auto& [a, c] = key;
    if (total_degree(a) > out.cutoff) continue;
    auto it = rows.find(c);
    if (it == rows.end()) continue;
    for (const auto& [b, w] : it->second) out.coeffs[{a, b}] += value * w;
  }
  std::erase_if(out.coeffs,
                [](const auto& kv) { return kv.second == Complex{0.0, 0.0}; });
  return out;
}

AlgebraElement adjoint(const AlgebraElement& A) {
  AlgebraElement out;
  out.n = A.n;
  out.hbar = A.hbar;
  out.cutoff = A.cutoff;
  out.mode = -A.mode;
  for (const auto& [key, value] : A.coeffs)
    out.coeffs[{key.second, key.first}] = std::conj(value);
  return out;
}

Complex kernel_trace(const AlgebraElement& A) {
  Complex sum{0.0, 0.0};
  for (const auto& [key, value] : A.coeffs)
    if (key.first == key.second) sum += value;
  return sum;
}

Complex fiber_integrated_trace(const AlgebraElement& A) {
  if (A.mode != 0) return {0.0, 0.0};
  const double h = 2.0 * std::numbers::pi * A.hbar;
  return h * kernel_trace(A);
}

Complex fock_basis_value(const MultiIndex& a, const ComplexPoint& z,
                         const PhaseSpaceConfig& cfg) {
  detail::check_dimension(a.size(), cfg.n, "fock_basis_value");
  detail::check_dimension(z.coords.size(), cfg.n, "fock_basis_value");
  const double pi_hbar_n = std::pow(std::numbers::pi * cfg.hbar, cfg.n);
  Complex value{1.0 / std::sqrt(cfg.h * pi_hbar_n), 0.0};
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

Complex dressed_basis_value(const MultiIndex& a, const ComplexPoint& z,
                            const PhaseSpaceConfig& cfg) {
  double norm2 = 0.0;
  for (const auto& c : z.coords) norm2 += std::norm(c);
  return fock_basis_value(a, z, cfg) * std::exp(-norm2 / (2.0 * cfg.hbar));
}

Complex kernel_value(const AlgebraElement& A, const ComplexPoint& z,
                     const ComplexPoint& z_prime) {
  const PhaseSpaceConfig cfg(A.n, A.hbar);
  Complex sum{0.0, 0.0};
  for (const auto& [key, value] : A.coeffs)
    sum += value * dressed_basis_value(key.first, z, cfg) *
           std::conj(dressed_basis_value(key.second, z_prime, cfg));
  return sum;
}

AlgebraElement convolve_quadrature(const AlgebraElement& A,
                                   const AlgebraElement& B,
                                   const QuadratureGrid& grid) {
  check_compatible(A, B, "convolve_quadrature");
  if (grid.n != A.n || grid.hbar != A.hbar)
    throw std::invalid_argument("convolve_quadrature: grid does not match element config");
  const int cutoff = std::min(A.cutoff, B.cutoff);
  if (grid.order < 2 * cutoff + 4)
    throw std::invalid_argument("convolve_quadrature: grid too coarse for this cutoff");

  const PhaseSpaceConfig cfg(A.n, A.hbar);
  const auto basis = multi_indices_up_to(A.n, cutoff);
  const std::size_t d = basis.size();
  const std::size_t m = grid.size();

  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t j = 0; j < d; ++j) pos[basis[j]] = j;

  // Dressed basis tabulated on the grid; E[i*d + j] = e_j(node_i) * Gaussian.
  std::vector<Complex> E(m * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j)
      E[i * d + j] = dressed_basis_value(basis[j], grid.nodes[i], cfg);

  // Dense coefficient matrices for pointwise kernel evaluation.
  std::vector<Complex> Am(d * d), Bm(d * d);
  for (const auto& [key, value] : A.coeffs)
    if (total_degree(key.first) <= cutoff && total_degree(key.second) <= cutoff)
      Am[pos.at(key.first) * d + pos.at(key.second)] = value;
  for (const auto& [key, value] : B.coeffs)
    if (total_degree(key.first) <= cutoff && total_degree(key.second) <= cutoff)
      Bm[pos.at(key.first) * d + pos.at(key.second)] = value;

  // For each junction node w_l:
  //   K_A(z_j, w_l) pointwise over the z grid, then its projections
  //   U[a][l] = sum_j wt_j conj(e_a(z_j)) K_A(z_j, w_l); same on the other
  //   leg for V[b][l] = sum_k wt_k e_b(z'_k) K_B(w_l, z'_k).
  std::vector<Complex> U(d * m), V(d * m);
  std::vector<Complex> ta(d), sb(d), colA(m), rowB(m);
  for (std::size_t l = 0; l < m; ++l) {
    const Complex* ew = &E[l * d];
    for (std::size_t p = 0; p < d; ++p) {
      Complex acc{0.0, 0.0};
      for (std::size_t q = 0; q < d; ++q)
        acc += Am[p * d + q] * std::conj(ew[q]);
      ta[p] = acc;
    }
    for (std::size_t q = 0; q < d; ++q) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < d; ++c) acc += Bm[c * d + q] * ew[c];
      sb[q] = acc;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Complex* ez = &E[i * d];
      Complex ka{0.0, 0.0}, kb{0.0, 0.0};
      for (std::size_t p = 0; p < d; ++p) {
        ka += ez[p] * ta[p];
        kb += std::conj(ez[p]) * sb[p];
      }
      colA[i] = ka;
      rowB[i] = kb;
    }
    for (std::size_t a = 0; a < d; ++a) {
      Complex ua{0.0, 0.0}, vb{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) {
        ua += grid.weights[i] * std::conj(E[i * d + a]) * colA[i];
        vb += grid.weights[i] * E[i * d + a] * rowB[i];
      }
      U[a * m + l] = ua;
      V[a * m + l] = vb;
    }
  }

  // C'_{ab} = h^3 sum_l wt_l U[a][l] V[b][l]: one h from the convolution
  // itself, one per projection integral.
  AlgebraElement out = zero_element(cfg, cutoff, A.mode);
  const double h3 = cfg.h * cfg.h * cfg.h;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Complex acc{0.0, 0.0};
      for (std::size_t l = 0; l < m; ++l)
        acc += grid.weights[l] * U[a * m + l] * V[b * m + l];
      const Complex value = h3 * acc;
      if (value != Complex{0.0, 0.0}) out.coeffs[{basis[a], basis[b]}] = value;
    }
  return out;
}

double max_abs_diff(const AlgebraElement& A, const AlgebraElement& B) {
  double worst = 0.0;
  for (const auto& [key, value] : A.coeffs)
    worst = std::max(worst, std::abs(value - B.at(key.first, key.second)));
  for (const auto& [key, value] : B.coeffs)
    worst = std::max(worst, std::abs(value - A.at(key.first, key.second)));
  return worst;
}

}  // namespace pqg
