// The Bingham distribution on the unit circle: canonical (M, z1)
// parameterization, density, closed-form multiplication, second-moment
// matrix, maximum-likelihood fit from a second-moment matrix, and sampling.
//
// Conventions used throughout:
//   - the concentration matrix is diag(z1, 0) with z1 <= 0, so the density
//     is f(x) = exp(z1 (x . m1)^2) / F with m1 the first column of M;
//   - the mode is the second column of M;
//   - x and -x describe the same orientation (antipodal symmetry).

#ifndef BINGHAM_BINGHAM_HPP_
#define BINGHAM_BINGHAM_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bingham {

// Largest magnitude of z1 before the distribution is numerically a point
// mass; requests beyond it raise ConcentrationOverflowError.
inline constexpr double kMaxConcentration = 1e6;

class ConcentrationOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point on S^1 under antipodal identification. Renormalized on
// construction; the canonical representative (c2 > 0, or c2 == 0 and
// c1 > 0) is only for display and serialization.
class UnitVec2 {
 public:
  UnitVec2() : v_(1.0, 0.0) {}
  UnitVec2(double c1, double c2) : UnitVec2(Eigen::Vector2d(c1, c2)) {}
  explicit UnitVec2(const Eigen::Vector2d& v);

  static UnitVec2 from_angle(double theta) {
    return UnitVec2(std::cos(theta), std::sin(theta));
  }

  double c1() const { return v_.x(); }
  double c2() const { return v_.y(); }
  const Eigen::Vector2d& vec() const { return v_; }
  double angle() const { return std::atan2(v_.y(), v_.x()); }

  UnitVec2 operator-() const { return UnitVec2(-v_); }
  UnitVec2 canonical() const;

 private:
  Eigen::Vector2d v_;
};

// Canonical Bingham parameters: orthogonal orientation matrix and the
// single free concentration z1 in [-kMaxConcentration, 0].
class BinghamParams {
 public:
  BinghamParams() : m_(Eigen::Matrix2d::Identity()), z1_(0.0) {}
  BinghamParams(const Eigen::Matrix2d& orientation, double z1);

  static BinghamParams uniform() { return BinghamParams(); }

  const Eigen::Matrix2d& m() const { return m_; }
  double z1() const { return z1_; }

 private:
  Eigen::Matrix2d m_;
  double z1_;
};

// Symmetric second-moment matrix E[x x^T] of a unit random vector; unit
// trace, eigenvalues in [0, 1].
struct CovMat2 {
  double s11 = 0.5;
  double s12 = 0.0;
  double s22 = 0.5;

  Eigen::Matrix2d matrix() const {
    Eigen::Matrix2d s;
    s << s11, s12, s12, s22;
    return s;
  }
  static CovMat2 from_matrix(const Eigen::Matrix2d& s) {
    return CovMat2{s(0, 0), 0.5 * (s(0, 1) + s(1, 0)), s(1, 1)};
  }
  double trace() const { return s11 + s22; }
};

// Closed-form eigendecomposition of a symmetric 2x2 matrix. Eigenvalues
// ascend; each eigenvector's largest-magnitude component is made positive;
// an exact eigenvalue tie returns the identity basis. Deterministic.
struct SymEig2 {
  Eigen::Vector2d eigenvalues;
  Eigen::Matrix2d eigenvectors;
};
SymEig2 eigen_sym2(const Eigen::Matrix2d& s);

// F(z1) = 2 pi 1F1(1/2, 1, z1). Domain error for z1 > 0 or non-finite.
double normalization_constant(double z1);

// Density at x; antipodally symmetric, integrates to 1 over S^1.
double pdf(const BinghamParams& p, const UnitVec2& x);

// Second column of M. For z1 = 0 every direction is modal; the column is
// still returned.
UnitVec2 mode(const BinghamParams& p);

// Parameters of the renormalized pointwise product of the two densities.
BinghamParams multiply(const BinghamParams& p1, const BinghamParams& p2);

// E[x x^T]; eigenvectors are the columns of M with eigenvalues
// (w1, 1 - w1), w1 = 1F1(3/2,2,z1) / (2 1F1(1/2,1,z1)).
CovMat2 covariance(const BinghamParams& p);

// Maximum-likelihood parameters for a given second-moment matrix: M from
// its eigenvectors, z1 from bisecting the concentration equation
// w1(z1) = smallest eigenvalue. Domain error if the trace deviates from 1
// by more than 1e-6; ConcentrationOverflowError if the smallest eigenvalue
// demands z1 below -kMaxConcentration.
BinghamParams mle_from_covariance(const CovMat2& s);

namespace detail {
// Uniform double in [0, 1) from the top 53 bits; keeps all sampling
// independent of implementation-defined <random> distributions.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
} // namespace detail

// Draws Bingham variates through a tabulated inverse CDF of the angle over
// [0, pi) (4096 intervals); the antipode is chosen by a fair coin. Build
// the table once, draw many times.
class BinghamSampler {
 public:
  explicit BinghamSampler(const BinghamParams& p);
  UnitVec2 draw(std::mt19937_64& rng) const;

 private:
  Eigen::Matrix2d m_;
  std::vector<double> cdf_; // cumulative trapezoid of exp(z1 cos^2)
};

// n independent draws from a fresh generator seeded with `seed`.
std::vector<UnitVec2> sample(const BinghamParams& p, std::uint64_t seed, std::size_t n);

// Text form "m11 m12 m21 m22 z1" (row-major, 17 significant digits).
std::string format_params(const BinghamParams& p);
BinghamParams parse_params(std::string_view text);

} // namespace bingham

#endif
