#include "bingham/bingham.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "bingham/specfun.hpp"

namespace bingham {

namespace {

constexpr int kTableIntervals = 4096;

// w1(z1), the smaller eigenvalue of the second-moment matrix; strictly
// increasing from 0 toward 1/2 at z1 = 0.
double omega1_of(double z1) {
  return 0.5 * kummer_threehalves_two(z1) / kummer_half_one(z1);
}

} // namespace

UnitVec2::UnitVec2(const Eigen::Vector2d& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0)
    throw std::invalid_argument("UnitVec2: vector is zero or non-finite");
  v_ = v / n;
}

UnitVec2 UnitVec2::canonical() const {
  if (v_.y() > 0.0 || (v_.y() == 0.0 && v_.x() > 0.0)) return *this;
  return UnitVec2(-v_);
}

BinghamParams::BinghamParams(const Eigen::Matrix2d& orientation, double z1)
    : m_(orientation), z1_(z1) {
  if (!m_.allFinite() || !std::isfinite(z1))
    throw std::invalid_argument("BinghamParams: non-finite parameter");
  const Eigen::Matrix2d gram = m_.transpose() * m_;
  if ((gram - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("BinghamParams: orientation matrix not orthogonal");
  if (z1 > 0.0)
    throw std::invalid_argument("BinghamParams: z1 must be <= 0");
  if (z1 < -kMaxConcentration)
    throw ConcentrationOverflowError("BinghamParams: z1 below -1e6 cap");
}

SymEig2 eigen_sym2(const Eigen::Matrix2d& s) {
  const double a = s(0, 0);
  const double b = 0.5 * (s(0, 1) + s(1, 0));
  const double c = s(1, 1);
  const double mean = 0.5 * (a + c);
  const double r = std::hypot(0.5 * (a - c), b);

  SymEig2 out;
  if (r == 0.0) {
    // exact tie: any basis is an eigenbasis, pick the identity
    out.eigenvalues = Eigen::Vector2d(mean, mean);
    out.eigenvectors = Eigen::Matrix2d::Identity();
    return out;
  }
  const double hi = mean + r;
  out.eigenvalues = Eigen::Vector2d(mean - r, hi);

  // Eigenvector of the larger eigenvalue; of the two equivalent closed
  // forms take the better conditioned one.
  Eigen::Vector2d vhi = std::abs(hi - a) >= std::abs(hi - c)
                            ? Eigen::Vector2d(b, hi - a)
                            : Eigen::Vector2d(hi - c, b);
  vhi.normalize();
  Eigen::Vector2d vlo(-vhi.y(), vhi.x());

  const auto fix_sign = [](Eigen::Vector2d& v) {
    const int i = std::abs(v.y()) > std::abs(v.x()) ? 1 : 0;
    if (v(i) < 0.0) v = -v;
  };
  fix_sign(vlo);
  fix_sign(vhi);
  out.eigenvectors.col(0) = vlo;
  out.eigenvectors.col(1) = vhi;
  return out;
}

double normalization_constant(double z1) {
  if (!std::isfinite(z1) || z1 > 0.0)
    throw std::domain_error("normalization_constant: z1 must be finite and <= 0");
  return 2.0 * M_PI * kummer_half_one(z1);
}

double pdf(const BinghamParams& p, const UnitVec2& x) {
  // exponent x^T M Z M^T x collapses to z1 (x . m1)^2 because z2 = 0
  const double d = x.vec().dot(p.m().col(0));
  return std::exp(p.z1() * d * d) / normalization_constant(p.z1());
}

UnitVec2 mode(const BinghamParams& p) { return UnitVec2(p.m().col(1)); }

BinghamParams multiply(const BinghamParams& p1, const BinghamParams& p2) {
  const Eigen::Matrix2d c =
      p1.z1() * (p1.m().col(0) * p1.m().col(0).transpose()) +
      p2.z1() * (p2.m().col(0) * p2.m().col(0).transpose());
  const SymEig2 eig = eigen_sym2(c);
  const double z1 = eig.eigenvalues(0) - eig.eigenvalues(1);
  if (z1 < -kMaxConcentration)
    throw ConcentrationOverflowError("multiply: combined concentration exceeds the -1e6 cap");
  return BinghamParams(eig.eigenvectors, z1);
}

CovMat2 covariance(const BinghamParams& p) {
  const double w1 = omega1_of(p.z1());
  const Eigen::Matrix2d s = w1 * (p.m().col(0) * p.m().col(0).transpose()) +
                            (1.0 - w1) * (p.m().col(1) * p.m().col(1).transpose());
  return CovMat2::from_matrix(s);
}

BinghamParams mle_from_covariance(const CovMat2& s) {
  if (std::abs(s.trace() - 1.0) > 1e-6)
    throw std::domain_error("mle_from_covariance: trace must be 1");
  const SymEig2 eig = eigen_sym2(s.matrix());
  const double w1 = eig.eigenvalues(0);
  if (w1 < -1e-9)
    throw std::domain_error("mle_from_covariance: matrix is not PSD");
  if (w1 < omega1_of(-kMaxConcentration))
    throw ConcentrationOverflowError(
        "mle_from_covariance: smallest eigenvalue demands z1 below -1e6");
  if (w1 >= 0.5) return BinghamParams(eig.eigenvectors, 0.0);

  // w1(z) is monotone, so plain bisection on [-cap, 0] is exact enough and
  // never diverges.
  double lo = -kMaxConcentration, hi = 0.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (omega1_of(mid) < w1 ? lo : hi) = mid;
  }
  return BinghamParams(eig.eigenvectors, 0.5 * (lo + hi));
}

BinghamSampler::BinghamSampler(const BinghamParams& p) : m_(p.m()) {
  // Unnormalized angle density exp(z1 cos^2 t) on [0, pi) in the canonical
  // frame; its peak value is 1, so no overflow for any admissible z1.
  cdf_.resize(kTableIntervals + 1);
  const double h = M_PI / kTableIntervals;
  double prev = std::exp(p.z1());
  cdf_[0] = 0.0;
  for (int i = 1; i <= kTableIntervals; ++i) {
    const double ct = std::cos(i * h);
    const double g = std::exp(p.z1() * ct * ct);
    cdf_[i] = cdf_[i - 1] + 0.5 * h * (prev + g);
    prev = g;
  }
}

UnitVec2 BinghamSampler::draw(std::mt19937_64& rng) const {
  const double target = detail::uniform01(rng) * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
  const int i = std::min<int>(static_cast<int>(it - cdf_.begin()), kTableIntervals);
  const double seg = cdf_[i] - cdf_[i - 1];
  const double frac = seg > 0.0 ? (target - cdf_[i - 1]) / seg : 0.0;
  const double theta = (i - 1 + frac) * (M_PI / kTableIntervals);

  Eigen::Vector2d y(std::cos(theta), std::sin(theta));
  if (detail::uniform01(rng) < 0.5) y = -y;
  return UnitVec2(m_ * y);
}

std::vector<UnitVec2> sample(const BinghamParams& p, std::uint64_t seed, std::size_t n) {
  const BinghamSampler sampler(p);
  std::mt19937_64 rng(seed);
  std::vector<UnitVec2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.draw(rng));
  return out;
}

std::string format_params(const BinghamParams& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g",
                p.m()(0, 0), p.m()(0, 1), p.m()(1, 0), p.m()(1, 1), p.z1());
  return buf;
}

BinghamParams parse_params(std::string_view text) {
  double v[5];
  const char* ptr = text.data();
  const char* end = text.data() + text.size();
  for (double& x : v) {
    while (ptr < end && (*ptr == ' ' || *ptr == '\t')) ++ptr;
    const auto res = std::from_chars(ptr, end, x);
    if (res.ec != std::errc{})
      throw std::invalid_argument("parse_params: expected five numbers");
    ptr = res.ptr;
  }
  Eigen::Matrix2d m;
  m << v[0], v[1], v[2], v[3];
  return BinghamParams(m, v[4]);
}

} // namespace bingham
