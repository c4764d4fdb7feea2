// Group structure on S^1 modulo +-1: composition is complex multiplication
// (angle addition), the inverse is the complex conjugate. Composition of
// Bingham random vectors is approximated by composing second-moment
// matrices and refitting, which is exact at the level of second moments.

#ifndef BINGHAM_S1GROUP_HPP_
#define BINGHAM_S1GROUP_HPP_

#include "bingham/bingham.hpp"

namespace bingham {

// (x1 y1 - x2 y2, x1 y2 + x2 y1), renormalized against drift.
UnitVec2 compose(const UnitVec2& x, const UnitVec2& y);

// (x1, -x2); compose(x, conjugate(x)) = +-(1, 0).
UnitVec2 conjugate(const UnitVec2& x);

// Second-moment matrix of the composition of two independent unit random
// vectors with moments a and b. Domain error if either trace deviates from
// 1 by more than 1e-6.
CovMat2 compose_cov(const CovMat2& a, const CovMat2& b);

// Moment-matched Bingham approximation of the composed random vector:
// mle_from_covariance(compose_cov(covariance(p1), covariance(p2))).
BinghamParams compose_dist(const BinghamParams& p1, const BinghamParams& p2);

} // namespace bingham

#endif
