#include "bingham/filter.hpp"

namespace bingham {

namespace {

// Composing every column with the same unit complex number is a rotation,
// so orthogonality survives analytically; re-orthonormalization only scrubs
// floating drift.
Eigen::Matrix2d orthonormalized(Eigen::Matrix2d m) {
  m.col(0).normalize();
  m.col(1) -= m.col(1).dot(m.col(0)) * m.col(0);
  m.col(1).normalize();
  return m;
}

} // namespace

FilterState initial_state(const BinghamParams& initial) {
  return FilterState{initial, Stage::estimated, 0};
}

FilterState predict(const FilterState& estimate, const BinghamParams& system_noise) {
  if (estimate.stage != Stage::estimated)
    throw std::logic_error("predict: state must hold an estimate");
  return FilterState{compose_dist(estimate.params, system_noise),
                     Stage::predicted, estimate.step + 1};
}

FilterState update(const FilterState& prediction, const BinghamParams& meas_noise,
                   const UnitVec2& z_hat, UpdateConvention convention) {
  if (prediction.stage != Stage::predicted)
    throw std::logic_error("update: state must hold a prediction");

  Eigen::Matrix2d rotated;
  for (int i = 0; i < 2; ++i) {
    const UnitVec2 column(Eigen::Vector2d(meas_noise.m().col(i)));
    const UnitVec2 r = convention == UpdateConvention::bayes
                           ? compose(z_hat, conjugate(column))
                           : compose(conjugate(z_hat), column);
    rotated.col(i) = r.vec();
  }
  const BinghamParams rotated_noise(orthonormalized(rotated), meas_noise.z1());
  return FilterState{multiply(rotated_noise, prediction.params),
                     Stage::estimated, prediction.step};
}

} // namespace bingham
