#include "bingham/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bingham {

namespace {

constexpr double kSeriesCut = 20.0; // power series below, asymptotics above
constexpr double kEps = std::numeric_limits<double>::epsilon();

// e^(-x) I0(x), x >= 0.
double bessel_i0e(double x) {
  if (x <= kSeriesCut) {
    // I0(x) = sum_k (x/2)^(2k) / (k!)^2, all terms positive.
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200 && term >= kEps * sum; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
    }
    return std::exp(-x) * sum;
  }
  // I0(x) ~ e^x / sqrt(2 pi x) * sum_k t_k with t_0 = 1,
  // t_{k+1} = t_k (2k+1)^2 / (8 x (k+1)); truncated at the smallest term.
  const double r = 1.0 / (8.0 * x);
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (2.0 * k + 1.0) * (2.0 * k + 1.0) * r / (k + 1.0);
    if (next >= term) break;
    sum += next;
    term = next;
    if (next < kEps * sum) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

// e^(-x) I1(x), x >= 0.
double bessel_i1e(double x) {
  if (x == 0.0) return 0.0;
  if (x <= kSeriesCut) {
    // I1(x) = sum_k (x/2)^(2k+1) / (k! (k+1)!).
    const double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int k = 1; k < 200 && term >= kEps * sum; ++k) {
      term *= q / (static_cast<double>(k) * (k + 1.0));
      sum += term;
    }
    return std::exp(-x) * sum;
  }
  // Same expansion with t_{k+1} = t_k ((2k+1)^2 - 4) / (8 x (k+1)); the
  // k=0 step flips the sign once, later steps keep it.
  const double r = 1.0 / (8.0 * x);
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next =
        term * ((2.0 * k + 1.0) * (2.0 * k + 1.0) - 4.0) * r / (k + 1.0);
    if (std::abs(next) >= std::abs(term)) break;
    sum += next;
    term = next;
    if (std::abs(next) < kEps * sum) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

// e^(-x) (I0(x) - I1(x)), x >= 0. At large x the two scaled functions agree
// to ~1/(2x), so subtracting the separately summed expansions would cancel
// the leading digits; the per-term differences t0_k - t1_k are all positive
// and summing them keeps full precision.
double bessel_i0e_minus_i1e(double x) {
  if (x == 0.0) return 1.0;
  if (x <= kSeriesCut) {
    const double q = 0.25 * x * x;
    double t0 = 1.0, s0 = 1.0;
    double t1 = 0.5 * x, s1 = t1;
    for (int k = 1; k < 200 && (t0 >= kEps * s0 || t1 >= kEps * s1); ++k) {
      t0 *= q / (static_cast<double>(k) * k);
      t1 *= q / (static_cast<double>(k) * (k + 1.0));
      s0 += t0;
      s1 += t1;
    }
    return std::exp(-x) * (s0 - s1);
  }
  const double r = 1.0 / (8.0 * x);
  double t0 = 1.0, t1 = 1.0, sum = 0.0, prev_d = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double c = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    const double n0 = t0 * c * r / (k + 1.0);
    const double n1 = t1 * (c - 4.0) * r / (k + 1.0);
    const double d = n0 - n1;
    if (k > 0 && d >= prev_d) break;
    sum += d;
    t0 = n0;
    t1 = n1;
    prev_d = d;
    if (d < kEps * sum) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

void check_domain(double z, const char* fn) {
  if (!std::isfinite(z))
    throw std::domain_error(std::string(fn) + ": non-finite argument");
  if (z > 1.0)
    throw std::domain_error(std::string(fn) + ": argument must be <= 1");
}

} // namespace

double kummer_half_one(double z) {
  check_domain(z, "kummer_half_one");
  if (z <= 0.0) return bessel_i0e(-0.5 * z);
  return std::exp(z) * bessel_i0e(0.5 * z);
}

double kummer_threehalves_two(double z) {
  check_domain(z, "kummer_threehalves_two");
  // For z <= 0, I1(z/2) = -I1(-z/2), so the identity's sum turns into a
  // difference of the scaled functions.
  if (z <= 0.0) return bessel_i0e_minus_i1e(-0.5 * z);
  const double x = 0.5 * z;
  return std::exp(z) * (bessel_i0e(x) + bessel_i1e(x));
}

} // namespace bingham
