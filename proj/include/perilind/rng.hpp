// rng.hpp — Deterministic random fixtures (seeded, platform-independent).

#pragma once

#include "perilind/types.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace perilind {

// std::mt19937_64 output is pinned by the standard; converting the raw bits
// ourselves keeps every fixture byte-identical across standard libraries
// (std::normal_distribution is implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * M_PI * v;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex normal_complex() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * M_SQRT1_2;
  }

  Matrix ginibre(Index rows, Index cols) {
    Matrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) {
        g(i, j) = normal_complex();
      }
    }
    return g;
  }

  Matrix hermitian(Index d) {
    const Matrix g = ginibre(d, d);
    return 0.5 * (g + g.adjoint());
  }

  // random density matrix, full rank almost surely
  Matrix density(Index d) {
    const Matrix g = ginibre(d, d);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace perilind
