// Recursive Bingham filter for the models
//   x_{k+1} = x_k (+) w_k   (system, Bingham noise w, may carry an offset)
//   z_k     = x_k (+) v_k   (measurement, Bingham noise v)
// Prediction composes the estimate with the system noise; the update
// multiplies the prediction by the measurement-rotated noise density.

#ifndef BINGHAM_FILTER_HPP_
#define BINGHAM_FILTER_HPP_

#include "bingham/bingham.hpp"
#include "bingham/s1group.hpp"

namespace bingham {

// How measurement-noise axes are rotated into the state frame during the
// update. The likelihood of x under z = x (+) v is a Bingham density whose
// axes are z (+) conj(m_i); `bayes` uses exactly that and reproduces the
// grid posterior. `conjugated_measurement` instead rotates the axes by the
// conjugated measurement, conj(z) (+) m_i. The two coincide whenever the
// rotated axis lands on a coordinate axis (e.g. axis-aligned noise with an
// axis-aligned measurement) but diverge in general position.
enum class UpdateConvention { bayes, conjugated_measurement };

enum class Stage { predicted, estimated };

struct FilterState {
  BinghamParams params;
  Stage stage = Stage::estimated;
  int step = 0;
};

// Fresh chain at step 0 holding `initial` as the current estimate.
FilterState initial_state(const BinghamParams& initial);

// Composes the estimate with the system noise; advances the step count.
// Requires stage == estimated.
FilterState predict(const FilterState& estimate, const BinghamParams& system_noise);

// Multiplies the prediction by the rotated measurement-noise density.
// Requires stage == predicted.
FilterState update(const FilterState& prediction, const BinghamParams& meas_noise,
                   const UnitVec2& z_hat,
                   UpdateConvention convention = UpdateConvention::bayes);

} // namespace bingham

#endif
