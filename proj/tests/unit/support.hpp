#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"

namespace hjls::testing {

// Seeded generator so property tests are reproducible run to run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  int sign() { return index(0, 1) ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

// Dense polynomial c0 + c1 x + ... with its derivative taken coefficient-wise,
// independent of any finite-difference machinery.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  }
  Polynomial derivative() const {
    Polynomial d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(static_cast<double>(k) * coeffs[k]);
    return d;
  }
  double scale_on(double lo, double hi) const {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      s += std::abs(coeffs[k]) * std::pow(std::max(std::abs(lo), std::abs(hi)), static_cast<double>(k));
    }
    return std::max(s, 1.0);
  }
};

inline Polynomial random_polynomial(Rng& rng, std::size_t degree) {
  Polynomial p;
  for (std::size_t k = 0; k <= degree; ++k) p.coeffs.push_back(rng.uniform(-2.0, 2.0));
  p.coeffs.back() = rng.sign() * rng.uniform(0.5, 2.0);
  return p;
}

inline Grid line_grid(std::size_t n, double lo, double hi, bool periodic = false) {
  return create_grid({lo}, {hi}, {n}, periodic ? std::set<std::size_t>{0} : std::set<std::size_t>{});
}

inline Grid periodic_circle(std::size_t n) { return line_grid(n, -M_PI, M_PI, true); }

template <class Fn>
ScalarField sample_1d(const Grid& g, Fn&& fn) {
  return sample(g, [&](std::span<const double> x) { return fn(x[0]); });
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Max error on nodes index in [lo, hi) of a 1-d field.
template <class Fn>
double max_error_1d(const Grid& g, const ScalarField& approx, Fn&& exact, std::size_t lo, std::size_t hi) {
  double m = 0.0;
  for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(approx[i] - exact(g.axis_nodes(0)[i])));
  return m;
}

inline double total_variation(const ScalarField& f, bool periodic) {
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) tv += std::abs(f[i + 1] - f[i]);
  if (periodic) tv += std::abs(f[0] - f[f.size() - 1]);
  return tv;
}

}  // namespace hjls::testing
