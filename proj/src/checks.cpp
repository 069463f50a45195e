#include "pqg/checks.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "pqg/character.hpp"
#include "pqg/groupoid.hpp"
#include "pqg/intrinsic_algebra.hpp"
#include "pqg/phase_space.hpp"
#include "pqg/polarization.hpp"
#include "pqg/rng.hpp"

namespace pqg {

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (!(hbar > 0.0)) throw std::invalid_argument("config: hbar must be positive");
  if (cutoff < 0) throw std::invalid_argument("config: cutoff must be >= 0");
  if (quad_order < 2) throw std::invalid_argument("config: quad-order must be >= 2");
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skip";
  }
}

namespace {

AlgebraElement random_element(Rng& rng, const PhaseSpaceConfig& cfg,
                              int cutoff, int mode = 1) {
  AlgebraElement e = zero_element(cfg, cutoff, mode);
  const auto basis = multi_indices_up_to(cfg.n, cutoff);
  for (const auto& a : basis)
    for (const auto& b : basis) e.coeffs[{a, b}] = rng.complex_box(0.5);
  return e;
}

PolarizedState random_state(Rng& rng, const PhaseSpaceConfig& cfg,
                            int cutoff) {
  PolarizedState s = zero_state(cutoff);
  for (const auto& a : multi_indices_up_to(cfg.n, cutoff))
    s.coeffs[a] = rng.complex_box(0.5);
  return s;
}

TangentVector rotated_tangent(const TangentVector& v, double s) {
  const Complex phase = std::exp(Complex(0.0, -s));
  TangentVector out = v;
  for (auto& c : out.coords) c *= phase;
  return out;
}

double circle_distance(double x, double y, double period) {
  const double d = std::abs(mod_period(x, period) - mod_period(y, period));
  return std::min(d, period - d);
}

struct Harness {
  const RunConfig& rc;
  PhaseSpaceConfig cfg;
  std::optional<QuadratureGrid> grid;
  std::string grid_note;
  std::vector<CheckResult> results;

  explicit Harness(const RunConfig& rc_) : rc(rc_), cfg(rc_.n, rc_.hbar) {
    try {
      grid = build_quadrature(cfg, rc.quad_order);
    } catch (const std::exception& ex) {
      grid_note = ex.what();
    }
  }

  Rng seeded(std::uint64_t salt) const { return Rng(rc.seed ^ salt); }

  void run(const std::string& name, double tolerance,
           const std::function<double()>& worst_error) {
    CheckResult r;
    r.name = name;
    try {
      r.max_error = worst_error();
      r.status = r.max_error <= tolerance ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& ex) {
      r.status = CheckStatus::fail;
      r.max_error = std::numeric_limits<double>::quiet_NaN();
      r.note = ex.what();
    }
    results.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why) {
    results.push_back({name, CheckStatus::skip, 0.0, why});
  }
};

void phase_space_checks(Harness& h) {
  const auto& cfg = h.cfg;

  h.run("phase_space.antisymmetry", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0001);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto u = rng.tangent_box(cfg.n, 1.5);
      const auto v = rng.tangent_box(cfg.n, 1.5);
      worst = std::max(worst, std::abs(symplectic_form(u, v, cfg) +
                                       symplectic_form(v, u, cfg)));
    }
    return worst;
  });

  h.run("phase_space.realness", 1e-14, [&] {
    Rng rng = h.seeded(0x5eed0002);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto z = rng.point_box(cfg.n, 1.5);
      const auto u = rng.tangent_box(cfg.n, 1.5);
      const auto v = rng.tangent_box(cfg.n, 1.5);
      Complex sw{0.0, 0.0}, sa{0.0, 0.0};
      for (int k = 0; k < cfg.n; ++k) {
        sw += u.coords[k] * std::conj(v.coords[k]) -
              v.coords[k] * std::conj(u.coords[k]);
        sa += std::conj(z.coords[k]) * u.coords[k] -
              z.coords[k] * std::conj(u.coords[k]);
      }
      worst = std::max(worst, std::abs((Complex(0.0, 0.5) * sw).imag()));
      worst = std::max(worst, std::abs((Complex(0.0, 0.25) * sa).imag()));
    }
    return worst;
  });

  h.run("phase_space.exterior_derivative", 1e-6, [&] {
    Rng rng = h.seeded(0x5eed0003);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto z = rng.point_box(cfg.n, 1.5);
      const auto u = rng.tangent_box(cfg.n, 1.5);
      const auto v = rng.tangent_box(cfg.n, 1.5);
      worst = std::max(worst,
                       std::abs(exterior_derivative_check(z, u, v, 1e-4, cfg) -
                                symplectic_form(u, v, cfg)));
    }
    return worst;
  });

  if (!h.grid) {
    h.skip("phase_space.quadrature_norm", h.grid_note);
  } else {
    h.run("phase_space.quadrature_norm", 1e-8, [&] {
      const double want = std::pow(std::numbers::pi * cfg.hbar, cfg.n);
      const double got = integrate(*h.grid, [&](const ComplexPoint& z) {
        double norm2 = 0.0;
        for (const auto& c : z.coords) norm2 += std::norm(c);
        return std::exp(-norm2 / cfg.hbar);
      });
      return std::abs(got - want) / want;
    });
  }

  h.run("phase_space.quadrature_exactness", 1e-10, [&] {
    std::vector<double> x, w;
    detail::hermite_lebesgue_rule(h.rc.quad_order, cfg.hbar, x, w);
    // moment recursion: m_d = m_{d-2} * (d-1) * hbar / 2, m_0 = sqrt(pi*hbar)
    double even_moment = std::sqrt(std::numbers::pi * cfg.hbar);
    double worst = 0.0;
    for (int d = 0; d <= 2 * h.rc.quad_order - 2; ++d) {
      double sum = 0.0, abs_sum = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double p = 1.0;
        for (int k = 0; k < d; ++k) p *= x[i];
        const double term = w[i] * p * std::exp(-x[i] * x[i] / cfg.hbar);
        sum += term;
        abs_sum += std::abs(term);
      }
      if (d % 2 == 0) {
        if (d > 0) even_moment *= (d - 1) * cfg.hbar / 2.0;
        worst = std::max(worst, std::abs(sum - even_moment) / even_moment);
      } else {
        worst = std::max(worst, std::abs(sum) / std::max(abs_sum, 1e-300));
      }
    }
    return worst;
  });
}

void groupoid_checks(Harness& h) {
  const auto& cfg = h.cfg;

  auto random_arrow_chain = [&](Rng& rng, int count) {
    std::vector<ComplexPoint> pts;
    for (int i = 0; i <= count; ++i) pts.push_back(rng.point_box(cfg.n, 1.5));
    std::vector<Arrow> arrows;
    for (int i = 0; i < count; ++i)
      arrows.push_back(make_arrow(pts[i], rng.uniform(0.0, cfg.h), pts[i + 1], cfg));
    return arrows;
  };

  h.run("groupoid.associativity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0010);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto ch = random_arrow_chain(rng, 3);
      const Arrow left = compose(compose(ch[0], ch[1], cfg), ch[2], cfg);
      const Arrow right = compose(ch[0], compose(ch[1], ch[2], cfg), cfg);
      worst = std::max(worst, circle_distance(left.action, right.action, cfg.h));
      worst = std::max(worst, distance(left.source, right.source));
      worst = std::max(worst, distance(left.target, right.target));
    }
    return worst;
  });

  h.run("groupoid.unit_inverse", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0011);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto ch = random_arrow_chain(rng, 1);
      const Arrow& a = ch[0];
      const Arrow lu = compose(unit_arrow(a.source, cfg), a, cfg);
      const Arrow ru = compose(a, unit_arrow(a.target, cfg), cfg);
      worst = std::max(worst, circle_distance(lu.action, a.action, cfg.h));
      worst = std::max(worst, circle_distance(ru.action, a.action, cfg.h));
      const Arrow round_trip = compose(a, invert(a, cfg), cfg);
      worst = std::max(worst, circle_distance(round_trip.action, 0.0, cfg.h));
      worst = std::max(worst, distance(round_trip.source, a.source));
      worst = std::max(worst, distance(round_trip.target, a.source));
    }
    return worst;
  });

  h.run("groupoid.lambda_invariance", 1e-9, [&] {
    Rng rng = h.seeded(0x5eed0012);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Arrow y = make_arrow(rng.point_box(cfg.n, 1.5),
                                 rng.uniform(0.0, cfg.h),
                                 rng.point_box(cfg.n, 1.5), cfg);
      const ArrowTangent v{rng.tangent_box(cfg.n, 1.5),
                           rng.uniform(-1.0, 1.0),
                           rng.tangent_box(cfg.n, 1.5)};
      const double s = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const ArrowTangent pushed{rotated_tangent(v.du, s), v.ds,
                                rotated_tangent(v.du_prime, s)};
      worst = std::max(worst,
                       std::abs(lambda_eval(lifted_rotation(s, y), pushed, cfg) -
                                lambda_eval(y, v, cfg)));
    }
    return worst;
  });

  h.run("groupoid.involution", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0013);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto ch = random_arrow_chain(rng, 1);
      const Arrow twice = invert(invert(ch[0], cfg), cfg);
      worst = std::max(worst, circle_distance(twice.action, ch[0].action, cfg.h));
      worst = std::max(worst, distance(twice.source, ch[0].source));
      worst = std::max(worst, distance(twice.target, ch[0].target));
    }
    return worst;
  });
}

void algebra_checks(Harness& h) {
  const auto& cfg = h.cfg;
  const int cutoff = h.rc.cutoff;

  h.run("algebra.associativity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0020);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto A = random_element(rng, cfg, cutoff);
      const auto B = random_element(rng, cfg, cutoff);
      const auto C = random_element(rng, cfg, cutoff);
      worst = std::max(worst, max_abs_diff(convolve(convolve(A, B), C),
                                           convolve(A, convolve(B, C))));
    }
    return worst;
  });

  const bool order_ok = h.rc.quad_order >= 2 * cutoff + 4;
  const double basis_size =
      static_cast<double>(multi_indices_up_to(cfg.n, cutoff).size());
  const double backend_cost =
      h.grid ? 4.0 * static_cast<double>(h.grid->size()) *
                   static_cast<double>(h.grid->size()) * basis_size
             : 0.0;
  if (!h.grid) {
    h.skip("algebra.backend_equivalence", h.grid_note);
  } else if (!order_ok) {
    h.skip("algebra.backend_equivalence",
           "quad order below 2*cutoff + 4; precondition not met");
  } else if (backend_cost > 2e9) {
    h.skip("algebra.backend_equivalence", "grid too large for this check");
  } else {
    h.run("algebra.backend_equivalence", 1e-8, [&] {
      Rng rng = h.seeded(0x5eed0021);
      const MultiIndex vacuum(cfg.n, 0);
      const auto P0 = matrix_unit(vacuum, vacuum, cfg, cutoff);
      double worst = max_abs_diff(convolve(P0, P0), P0);
      worst = std::max(worst, max_abs_diff(convolve_quadrature(P0, P0, *h.grid), P0));
      const auto A = random_element(rng, cfg, cutoff);
      const auto B = random_element(rng, cfg, cutoff);
      worst = std::max(worst, max_abs_diff(convolve(A, B),
                                           convolve_quadrature(A, B, *h.grid)));
      return worst;
    });
  }

  h.run("algebra.trace_cyclicity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0022);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto A = random_element(rng, cfg, cutoff);
      const auto B = random_element(rng, cfg, cutoff);
      worst = std::max(worst, std::abs(kernel_trace(convolve(A, B)) -
                                       kernel_trace(convolve(B, A))));
    }
    return worst;
  });

  h.run("algebra.positivity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0023);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto A = random_element(rng, cfg, cutoff);
      const Complex t =
          kernel_trace(convolve(adjoint(A).with_mode(A.mode), A));
      worst = std::max(worst, std::abs(t.imag()));
      worst = std::max(worst, std::max(0.0, -t.real()));
    }
    return worst;
  });
}

void polarization_checks(Harness& h) {
  const auto& cfg = h.cfg;
  const int cutoff = h.rc.cutoff;

  h.run("polarization.diagonal_hermitian", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0030);
    double worst = 0.0;
    for (const auto& a : multi_indices_up_to(cfg.n, std::min(cutoff, 4))) {
      const auto image = hamiltonian_apply(basis_state(a, cutoff), cfg);
      for (const auto& [b, value] : image.coeffs)
        if (b != a && std::abs(value) > 0.0) worst = 1.0;  // off-diagonal leak
    }
    for (int i = 0; i < 20; ++i) {
      const auto s1 = random_state(rng, cfg, cutoff);
      const auto s2 = random_state(rng, cfg, cutoff);
      worst = std::max(
          worst, std::abs(inner_product(hamiltonian_apply(s1, cfg), s2, cfg) -
                          inner_product(s1, hamiltonian_apply(s2, cfg), cfg)));
    }
    return worst;
  });

  h.run("polarization.spectrum_law", 1e-12, [&] {
    double worst = 0.0;
    for (const auto& a : multi_indices_up_to(cfg.n, 6)) {
      const double want = cfg.hbar * (total_degree(a) + 0.5 * cfg.n);
      worst = std::max(worst, std::abs(spectrum(a, cfg).value - want));
      const auto image = hamiltonian_apply(basis_state(a, 6), cfg);
      worst = std::max(worst, std::abs(image.coeffs.at(a) - Complex(want, 0.0)));
    }
    return worst;
  });

  h.run("polarization.stone_consistency", 0.0, [&] {
    Rng rng = h.seeded(0x5eed0031);
    const double delta = 1e-5;
    const double nu_max = cutoff + 0.5 * cfg.n;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto s = random_state(rng, cfg, cutoff);
      const auto evolved = evolve(s, delta, cfg);
      const auto hs = hamiltonian_apply(s, cfg);
      for (const auto& [a, value] : s.coeffs) {
        const Complex lhs = (evolved.coeffs.at(a) - value) / delta;
        const Complex rhs = Complex(0.0, -1.0 / cfg.hbar) * hs.coeffs.at(a);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    // report the margin against the O(delta) bound
    return worst - nu_max * nu_max * delta;
  });

  h.run("polarization.unitarity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0032);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto s1 = random_state(rng, cfg, cutoff);
      const auto s2 = random_state(rng, cfg, cutoff);
      const double t = rng.uniform(-10.0, 10.0);
      worst = std::max(worst,
                       std::abs(inner_product(evolve(s1, t, cfg),
                                              evolve(s2, t, cfg), cfg) -
                                inner_product(s1, s2, cfg)));
    }
    return worst;
  });

  h.run("polarization.periodicity", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0033);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto s = random_state(rng, cfg, cutoff);
      const auto back = evolve(s, 4.0 * std::numbers::pi, cfg);
      for (const auto& [a, value] : s.coeffs)
        worst = std::max(worst, std::abs(back.coeffs.at(a) - value));
    }
    return worst;
  });

  const int expansion_levels = std::min(cutoff, 6);
  if (!h.grid) {
    h.skip("polarization.ground_state", h.grid_note);
  } else if (2 * h.rc.quad_order - 1 < expansion_levels) {
    h.skip("polarization.ground_state", "quad order too small for the Fock expansion");
  } else {
    h.run("polarization.ground_state", 1e-8, [&] {
      const MultiIndex vacuum(cfg.n, 0);
      const auto ground = basis_state(vacuum, cutoff);
      const auto image = hamiltonian_apply(ground, cfg);
      double worst = std::abs(image.coeffs.at(vacuum) -
                              Complex(0.5 * cfg.n * cfg.hbar, 0.0));
      // Fock expansion of the profile: vacuum coefficient 1, others 0.
      const double measure = std::pow(std::numbers::pi * cfg.hbar, -cfg.n);
      for (const auto& a : multi_indices_up_to(cfg.n, expansion_levels)) {
        const Complex coefficient =
            measure * integrate(*h.grid, [&](const ComplexPoint& z) {
              return std::conj(monomial_basis_value(a, z, cfg)) *
                     ground_state_profile(z, cfg) *
                     std::exp(-0.5 * [&] {
                       double norm2 = 0.0;
                       for (const auto& c : z.coords) norm2 += std::norm(c);
                       return norm2;
                     }() / cfg.hbar);
            });
        const Complex want = total_degree(a) == 0 ? Complex{1.0, 0.0}
                                                  : Complex{0.0, 0.0};
        worst = std::max(worst, std::abs(coefficient - want));
      }
      return worst;
    });
  }
}

void character_checks(Harness& h) {
  h.run("character.degeneracy_agreement", 0.0, [&] {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const auto series = character_series(n, 10);
      if (series.coeffs[0] != 1) worst = 1.0;
      std::int64_t running = 0;
      for (int m = 0; m <= 10; ++m) {
        const std::int64_t g = series.coeffs[m];
        if (g < 1) worst = 1.0;
        if (g != level_degeneracy_enumerated(n, m)) worst = 1.0;
        if (g != level_degeneracy_closed_form(n, m)) worst = 1.0;
        running += g;
        if (running != binomial(m + n, n)) worst = 1.0;
      }
    }
    return worst;
  });

  h.run("character.product_law", 0.0, [&] {
    const int M = 20;
    const auto one_mode = character_series(1, M);
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::int64_t> cauchy(M + 1, 0);
      cauchy[0] = 1;
      for (int factor = 0; factor < n; ++factor) {
        std::vector<std::int64_t> next(M + 1, 0);
        for (int i = 0; i <= M; ++i)
          for (int j = 0; i + j <= M; ++j)
            next[i + j] += cauchy[i] * one_mode.coeffs[j];
        cauchy = std::move(next);
      }
      // n convolution factors applied to the delta series
      std::vector<std::int64_t> expected = cauchy;
      const auto series = character_series(n, M);
      for (int m = 0; m <= M; ++m)
        if (series.coeffs[m] != expected[m]) worst = 1.0;
    }
    return worst;
  });

  h.run("character.level_exponents", 1e-13, [&] {
    Rng rng = h.seeded(0x5eed0040);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const Complex q{rng.uniform(0.1, 0.8), 0.0};
      const int M = 30;
      const auto reg = regularized_character(q, n, M);
      const auto series = character_series(n, M);
      Complex rebuilt{0.0, 0.0};
      for (int m = 0; m <= M; ++m)
        rebuilt += static_cast<double>(series.coeffs[m]) *
                   std::pow(q, m + 0.5 * n);
      worst = std::max(worst, std::abs(rebuilt - reg.partial));
    }
    return worst;
  });

  h.run("character.convergence", 0.0, [&] {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const Complex q{0.5, 0.0};
      double previous = std::numeric_limits<double>::infinity();
      for (int M = 1; M <= 40; ++M) {
        const auto reg = regularized_character(q, n, M);
        const double err = std::abs(reg.closed - reg.partial);
        if (err > previous + 1e-15) worst = std::max(worst, err - previous);
        previous = err;
      }
    }
    return worst;
  });

  h.run("character.fixed_point_vs_spectral", 1e-12, [&] {
    Rng rng = h.seeded(0x5eed0041);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int n = 1 + static_cast<int>(rng.uniform() * 3.0);
      const int M = 1 + static_cast<int>(rng.uniform() * 60.0);
      const double r = rng.uniform(0.05, 0.85);
      const double arg = rng.uniform(-1.4, 1.4);
      const Complex q = std::polar(r, arg);
      const PhaseSpaceConfig cfg_n(n, h.rc.hbar);
      const auto reg = regularized_character(q, n, M);
      const Complex direct = direct_trace_character(q, n, M, cfg_n);
      worst = std::max(worst, std::abs(direct - reg.partial));
      worst = std::max(worst,
                       std::max(0.0, std::abs(reg.closed - reg.partial) -
                                         character_tail_bound(r, n, M)));
    }
    return worst;
  });
}

}  // namespace

std::vector<CheckResult> run_all_checks(const RunConfig& rc) {
  rc.validate();
  Harness h(rc);
  phase_space_checks(h);
  groupoid_checks(h);
  algebra_checks(h);
  polarization_checks(h);
  character_checks(h);
  return std::move(h.results);
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

}  // namespace pqg
