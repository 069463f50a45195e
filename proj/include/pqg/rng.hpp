#pragma once

// Seeded generator used by the randomized checks. All draws go through the
// raw mt19937_64 stream so that a given seed yields the same samples on
// every platform.

#include <cstdint>
#include <random>

#include "pqg/phase_space.hpp"

namespace pqg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    const double im = uniform(-half_width, half_width);
    return {re, im};
  }

  ComplexPoint point_box(int n, double half_width) {
    ComplexPoint p;
    p.coords.reserve(n);
    for (int k = 0; k < n; ++k) p.coords.push_back(complex_box(half_width));
    return p;
  }

  // Uniform in the ball |z| <= radius of C^n (rejection from the box).
  ComplexPoint point_ball(int n, double radius) {
    for (;;) {
      ComplexPoint p = point_box(n, radius);
      double norm2 = 0.0;
      for (const auto& c : p.coords) norm2 += std::norm(c);
      if (norm2 <= radius * radius) return p;
    }
  }

  TangentVector tangent_box(int n, double half_width) {
    TangentVector v;
    v.coords.reserve(n);
    for (int k = 0; k < n; ++k) v.coords.push_back(complex_box(half_width));
    return v;
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pqg
