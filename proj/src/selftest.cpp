#include "bingham/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "bingham/bingham.hpp"
#include "bingham/detail/quadrature.hpp"
#include "bingham/filter.hpp"
#include "bingham/s1group.hpp"
#include "bingham/specfun.hpp"

namespace bingham {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d m;
  m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return m;
}

BinghamParams random_params(std::mt19937_64& rng, double z_lo, double z_hi) {
  const double angle = detail::uniform01(rng) * 2.0 * M_PI;
  const double z1 = z_lo + (z_hi - z_lo) * detail::uniform01(rng);
  return BinghamParams(rotation(angle), z1);
}

CheckResult check_normalization() {
  double worst = 0.0;
  for (double z1 : {0.0, -1.0, -8.0, -50.0, -200.0}) {
    const BinghamParams p(Eigen::Matrix2d::Identity(), z1);
    const double integral = detail::simpson(
        [&](double t) { return pdf(p, UnitVec2::from_angle(t)); }, 0.0, 2.0 * M_PI, 10000);
    worst = std::max(worst, std::abs(integral - 1.0));
  }
  return CheckResult{"normalization_quadrature", worst < 1e-8,
                     fmt("max |integral - 1| = %.3g (tol 1e-8)", worst)};
}

CheckResult check_derivative_identity() {
  const double h = 1e-5;
  double worst = 0.0;
  for (double z : {-0.5, -1.0, -5.0, -20.0, -100.0}) {
    const double fd = (kummer_half_one(z + h) - kummer_half_one(z - h)) / (2.0 * h);
    const double ref = 0.5 * kummer_threehalves_two(z);
    worst = std::max(worst, std::abs(fd - ref) / ref);
  }
  return CheckResult{"kummer_derivative_identity", worst < 1e-6,
                     fmt("max rel err = %.3g (tol 1e-6)", worst)};
}

CheckResult check_multiplication_closure(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const BinghamParams p1 = random_params(rng, -60.0, -0.05);
    const BinghamParams p2 = random_params(rng, -60.0, -0.05);
    const BinghamParams prod = multiply(p1, p2);
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (int j = 0; j < 360; ++j) {
      const UnitVec2 x = UnitVec2::from_angle(2.0 * M_PI * j / 360.0);
      const double ratio = pdf(p1, x) * pdf(p2, x) / pdf(prod, x);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    worst = std::max(worst, (hi - lo) / lo);
  }
  return CheckResult{"multiplication_closure", worst < 1e-9,
                     fmt("max ratio spread = %.3g (tol 1e-9)", worst)};
}

CheckResult check_mle_round_trip() {
  double worst = 0.0;
  for (double z1 = -100.0; z1 <= -0.1; z1 += 0.7) {
    const BinghamParams p(rotation(0.3), z1);
    const BinghamParams back = mle_from_covariance(covariance(p));
    worst = std::max(worst, std::abs(back.z1() - z1));
  }
  return CheckResult{"mle_round_trip", worst < 1e-6,
                     fmt("max |z1 error| = %.3g (tol 1e-6)", worst)};
}

CheckResult check_group_laws(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const UnitVec2 a = UnitVec2::from_angle(detail::uniform01(rng) * 2.0 * M_PI);
    const UnitVec2 b = UnitVec2::from_angle(detail::uniform01(rng) * 2.0 * M_PI);
    const UnitVec2 c = UnitVec2::from_angle(detail::uniform01(rng) * 2.0 * M_PI);
    worst = std::max(worst,
                     (compose(compose(a, b), c).vec() - compose(a, compose(b, c)).vec())
                         .cwiseAbs().maxCoeff());
    const Eigen::Vector2d inv = compose(a, conjugate(a)).vec();
    worst = std::max(worst, std::min((inv - Eigen::Vector2d(1, 0)).norm(),
                                     (inv + Eigen::Vector2d(1, 0)).norm()));
  }
  return CheckResult{"compose_group_laws", worst < 1e-12,
                     fmt("max deviation = %.3g (tol 1e-12)", worst)};
}

CheckResult check_lemma2_monte_carlo(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const BinghamParams pa = random_params(rng, -30.0, -0.2);
    const BinghamParams pb = random_params(rng, -30.0, -0.2);
    const CovMat2 analytic = compose_cov(covariance(pa), covariance(pb));

    const BinghamSampler sa(pa), sb(pb);
    Eigen::Matrix2d emp = Eigen::Matrix2d::Zero();
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const UnitVec2 c = compose(sa.draw(rng), sb.draw(rng));
      emp += c.vec() * c.vec().transpose();
    }
    emp /= n;
    worst = std::max(worst, (emp - analytic.matrix()).cwiseAbs().maxCoeff());
  }
  return CheckResult{"lemma2_monte_carlo", worst < 0.01,
                     fmt("max entrywise gap = %.3g (tol 0.01, 1e5 pairs x 20)", worst)};
}

CheckResult check_update_bayes(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const BinghamParams prior = random_params(rng, -40.0, -0.1);
    const BinghamParams noise(Eigen::Matrix2d::Identity(),
                              -0.2 - 30.0 * detail::uniform01(rng));
    const UnitVec2 z_hat = UnitVec2::from_angle(detail::uniform01(rng) * 2.0 * M_PI);

    FilterState st{prior, Stage::predicted, 1};
    const BinghamParams post = update(st, noise, z_hat).params;

    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (int j = 0; j < 720; ++j) {
      const UnitVec2 x = UnitVec2::from_angle(2.0 * M_PI * j / 720.0);
      const double bayes = pdf(prior, x) * pdf(noise, compose(conjugate(x), z_hat));
      const double ratio = bayes / pdf(post, x);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    worst = std::max(worst, (hi - lo) / lo);
  }
  return CheckResult{"update_bayes_grid", worst < 1e-6,
                     fmt("max ratio spread = %.3g (tol 1e-6)", worst)};
}

CheckResult check_trace_preservation(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CovMat2 a = covariance(random_params(rng, -80.0, -0.01));
    const CovMat2 b = covariance(random_params(rng, -80.0, -0.01));
    worst = std::max(worst, std::abs(compose_cov(a, b).trace() - 1.0));
  }
  return CheckResult{"compose_cov_trace", worst < 1e-12,
                     fmt("max |trace - 1| = %.3g (tol 1e-12)", worst)};
}

} // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_normalization());
  results.push_back(check_derivative_identity());
  results.push_back(check_multiplication_closure(rng));
  results.push_back(check_mle_round_trip());
  results.push_back(check_group_laws(rng));
  results.push_back(check_trace_preservation(rng));
  results.push_back(check_lemma2_monte_carlo(rng));
  results.push_back(check_update_bayes(rng));
  return results;
}

} // namespace bingham
