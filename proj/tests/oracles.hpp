// Test-only reference implementations. Everything here is deliberately
// independent of the library's evaluation paths: plain power series with the
// exponential factors applied explicitly, composite-Simpson quadrature, and
// a tiny deterministic RNG for property tests.

#ifndef BINGHAM_TESTS_ORACLES_HPP_
#define BINGHAM_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <limits>

namespace oracle {

// Raw power series for I0 and I1 (nu = 0, 1), x >= 0, no scaling.
inline double bessel_i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; term > 1e-20 * sum; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
  }
  return sum;
}

inline double bessel_i1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 0.5 * x, sum = term;
  for (int k = 1; term > 1e-20 * sum; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1.0));
    sum += term;
  }
  return sum;
}

// 1F1(1/2,1,z) = e^(z/2) I0(z/2); I0 is even.
inline double f11_half_one_bessel(double z) {
  return std::exp(0.5 * z) * bessel_i0_series(std::abs(0.5 * z));
}

// 1F1(3/2,2,z) = e^(z/2) (I0(z/2) + I1(z/2)); I1 is odd.
inline double f11_threehalves_two_bessel(double z) {
  const double w = 0.5 * z;
  const double i1 = (w >= 0 ? 1.0 : -1.0) * bessel_i1_series(std::abs(w));
  return std::exp(w) * (bessel_i0_series(std::abs(w)) + i1);
}

// Direct Kummer series sum_k (a)_k/(b)_k w^k/k!, convergent and
// cancellation-free for w >= 0.
inline double kummer_series(double a, double b, double w) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; std::abs(term) > 1e-20 * std::abs(sum) && k < 100000; ++k) {
    term *= (a + k) / (b + k) * w / (k + 1.0);
    sum += term;
  }
  return sum;
}

// Kummer transformation 1F1(a,b,z) = e^z 1F1(b-a,b,-z), used with z <= 0 so
// the transformed series has positive argument.
inline double f11_half_one_transform(double z) {
  return std::exp(z) * kummer_series(0.5, 1.0, -z);
}

inline double f11_threehalves_two_transform(double z) {
  return std::exp(z) * kummer_series(0.5, 2.0, -z);
}

// Composite Simpson on [a,b] with n subintervals (n made even internally).
template <typename F>
double simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Deterministic uniform generator (splitmix-fed xorshift via mt19937_64
// would also do; keep it self-contained and implementation-defined-free).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

} // namespace oracle

#endif
