// Evaluation harness: an angle-domain Kalman baseline, Monte-Carlo scenario
// simulation comparing it against the Bingham filter, and figure-data
// emitters (density curves and KL divergence to the matched Gaussian).

#ifndef BINGHAM_EVALSUITE_HPP_
#define BINGHAM_EVALSUITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bingham/bingham.hpp"
#include "bingham/filter.hpp"

namespace bingham {

// arccos(|a . b|) in [0, pi/2]; zero iff a = +-b.
double angular_error(const UnitVec2& a, const UnitVec2& b);

// Angle reduced to [0, pi) (orientations repeat every half turn).
double wrap_half_circle(double angle);

// Innovation wrapped to [-pi/2, pi/2).
double wrap_innovation(double delta);

// Scalar Kalman filter on the angle modulo pi.
struct KalmanState {
  double angle_mean = 0.0; // radians in [0, pi)
  double variance = 1.0;   // radians^2, > 0
};

KalmanState kalman_predict(const KalmanState& s, double q, double offset);
KalmanState kalman_update(const KalmanState& s, double r, double meas_angle);

// Standard deviation of the angle about the mode, from the quadrature
// second moment over the half period centered there. Depends only on z1.
double angular_stddev(const BinghamParams& p);

struct ScenarioConfig {
  int steps = 100;
  int runs = 1;
  std::uint64_t seed = 0;
  BinghamParams system_noise;
  BinghamParams meas_noise;
  UnitVec2 initial_state;
  BinghamParams initial_estimate;
  // Baseline noise variances; when absent they default to the angular
  // variances of the Bingham noises so both filters see equally
  // informative noise.
  std::optional<double> kalman_q;
  std::optional<double> kalman_r;
};

// Parses the flat "key = value" scenario format (see README). Unknown keys
// and missing required keys raise std::invalid_argument.
ScenarioConfig parse_scenario(std::string_view text);

struct RunMetrics {
  double mean_err_bingham = 0.0; // radians, mean over all steps and runs
  double mean_err_kalman = 0.0;
  // per-step (bingham, kalman) means across runs, index = step - 1
  std::vector<std::pair<double, double>> per_step_err;
  double wallclock = 0.0; // seconds
};

struct StepError {
  int step;
  int run;
  double err_bingham;
  double err_kalman;
};

struct SimulationResult {
  RunMetrics metrics;
  std::vector<StepError> errors; // ordered by (run, step)
};

// Simulates cfg.runs independent trajectories, runs both filters on each,
// and aggregates antipodal angular errors. Deterministic for a given seed:
// every run owns a generator stream derived from (seed, run index), and
// reduction order is fixed. Runs execute concurrently up to the
// BINGHAM_THREADS cap.
SimulationResult simulate_detailed(const ScenarioConfig& cfg);
RunMetrics simulate(const ScenarioConfig& cfg);

struct PdfRow {
  double theta;
  double z1;
  double pdf;
};

// Density curves theta -> pdf((cos theta, sin theta)) for the canonical
// orientation, one curve per z1, theta over [0, 2 pi).
std::vector<PdfRow> figure_pdf_data(const std::vector<double>& z1_list, int resolution);

struct KldRow {
  double z1;
  double kld;
};

// KL divergence on [0, pi] between the Bingham angle density and the
// Gaussian with equal mode and standard deviation.
std::vector<KldRow> figure_kld_data(const std::vector<double>& z1_list);

// CSV output, header row first, 15 significant digits, '\n' terminated.
void write_errors_csv(std::ostream& os, const std::vector<StepError>& rows);
void write_pdf_csv(std::ostream& os, const std::vector<PdfRow>& rows);
void write_kld_csv(std::ostream& os, const std::vector<KldRow>& rows);

} // namespace bingham

#endif
