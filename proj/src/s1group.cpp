#include "bingham/s1group.hpp"

#include <cmath>

namespace bingham {

UnitVec2 compose(const UnitVec2& x, const UnitVec2& y) {
  return UnitVec2(x.c1() * y.c1() - x.c2() * y.c2(),
                  x.c1() * y.c2() + x.c2() * y.c1());
}

UnitVec2 conjugate(const UnitVec2& x) { return UnitVec2(x.c1(), -x.c2()); }

CovMat2 compose_cov(const CovMat2& a, const CovMat2& b) {
  if (std::abs(a.trace() - 1.0) > 1e-6 || std::abs(b.trace() - 1.0) > 1e-6)
    throw std::domain_error("compose_cov: inputs must have unit trace");
  // terms are paired so that swapping a and b is bitwise identical
  CovMat2 c;
  c.s11 = a.s11 * b.s11 - 2.0 * (a.s12 * b.s12) + a.s22 * b.s22;
  c.s12 = (a.s11 * b.s12 + a.s12 * b.s11) - (a.s12 * b.s22 + a.s22 * b.s12);
  c.s22 = (a.s11 * b.s22 + a.s22 * b.s11) + 2.0 * (a.s12 * b.s12);
  return c;
}

BinghamParams compose_dist(const BinghamParams& p1, const BinghamParams& p2) {
  return mle_from_covariance(compose_cov(covariance(p1), covariance(p2)));
}

} // namespace bingham
