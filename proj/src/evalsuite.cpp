#include "bingham/evalsuite.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "bingham/detail/quadrature.hpp"
#include "bingham/s1group.hpp"

namespace bingham {

double angular_error(const UnitVec2& a, const UnitVec2& b) {
  const double d = std::min(1.0, std::abs(a.vec().dot(b.vec())));
  return std::acos(d);
}

double wrap_half_circle(double angle) {
  double w = std::fmod(angle, M_PI);
  if (w < 0.0) w += M_PI;
  return w == M_PI ? 0.0 : w;
}

double wrap_innovation(double delta) {
  return delta - M_PI * std::floor(delta / M_PI + 0.5);
}

KalmanState kalman_predict(const KalmanState& s, double q, double offset) {
  if (!(q > 0.0)) throw std::invalid_argument("kalman_predict: q must be > 0");
  return KalmanState{wrap_half_circle(s.angle_mean + offset), s.variance + q};
}

KalmanState kalman_update(const KalmanState& s, double r, double meas_angle) {
  if (!(r > 0.0)) throw std::invalid_argument("kalman_update: r must be > 0");
  const double innovation = wrap_innovation(meas_angle - s.angle_mean);
  const double gain = s.variance / (s.variance + r);
  return KalmanState{wrap_half_circle(s.angle_mean + gain * innovation),
                     (1.0 - gain) * s.variance};
}

namespace {

// Second moment of (theta - pi/2) over [0, pi] for the canonical angle
// density exp(z1 cos^2 theta); node count scales with the peak width.
double angular_variance_of_z1(double z1) {
  const int n = std::min(200000, 4096 + 64 * static_cast<int>(std::sqrt(std::abs(z1))));
  const auto g = [z1](double t) {
    const double c = std::cos(t);
    return std::exp(z1 * c * c);
  };
  const double num = detail::simpson(
      [&](double t) { return (t - M_PI_2) * (t - M_PI_2) * g(t); }, 0.0, M_PI, n);
  const double den = detail::simpson(g, 0.0, M_PI, n);
  return num / den;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t run) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (run + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int thread_budget(int runs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("BINGHAM_THREADS")) {
    int cap = 0;
    const auto res = std::from_chars(env, env + std::string_view(env).size(), cap);
    if (res.ec == std::errc{} && cap >= 1) n = std::min<unsigned>(n, cap);
  }
  return static_cast<int>(std::min<unsigned>(n, runs));
}

} // namespace

double angular_stddev(const BinghamParams& p) {
  return std::sqrt(angular_variance_of_z1(p.z1()));
}

SimulationResult simulate_detailed(const ScenarioConfig& cfg) {
  if (cfg.steps < 1 || cfg.runs < 1)
    throw std::invalid_argument("simulate: steps and runs must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();

  const double q = cfg.kalman_q ? *cfg.kalman_q : angular_variance_of_z1(cfg.system_noise.z1());
  const double r = cfg.kalman_r ? *cfg.kalman_r : angular_variance_of_z1(cfg.meas_noise.z1());
  const double offset = wrap_half_circle(mode(cfg.system_noise).angle());
  const double mean0 = wrap_half_circle(mode(cfg.initial_estimate).angle());
  const double var0 = angular_variance_of_z1(cfg.initial_estimate.z1());

  const BinghamSampler system_sampler(cfg.system_noise);
  const BinghamSampler meas_sampler(cfg.meas_noise);

  SimulationResult result;
  result.errors.resize(static_cast<std::size_t>(cfg.runs) * cfg.steps);

  const auto run_one = [&](int run) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(run)));
    UnitVec2 truth = cfg.initial_state;
    FilterState fs = initial_state(cfg.initial_estimate);
    KalmanState ks{mean0, var0};
    StepError* out = result.errors.data() + static_cast<std::size_t>(run) * cfg.steps;
    for (int k = 1; k <= cfg.steps; ++k) {
      truth = compose(truth, system_sampler.draw(rng));
      const UnitVec2 meas = compose(truth, meas_sampler.draw(rng));
      fs = update(predict(fs, cfg.system_noise), cfg.meas_noise, meas);
      ks = kalman_update(kalman_predict(ks, q, offset), r, wrap_half_circle(meas.angle()));
      out[k - 1] = StepError{k, run,
                             angular_error(mode(fs.params), truth),
                             angular_error(UnitVec2::from_angle(ks.angle_mean), truth)};
    }
  };

  const int threads = thread_budget(cfg.runs);
  if (threads <= 1) {
    for (int run = 0; run < cfg.runs; ++run) run_one(run);
  } else {
    std::mutex failure_mutex;
    int failed_run = -1;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int run = t; run < cfg.runs; run += threads) {
          try {
            run_one(run);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (failed_run < 0 || run < failed_run) {
              failed_run = run;
              failure = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // fixed reduction order: runs in index order, then steps
  result.metrics.per_step_err.assign(cfg.steps, {0.0, 0.0});
  for (const StepError& e : result.errors) {
    result.metrics.per_step_err[e.step - 1].first += e.err_bingham;
    result.metrics.per_step_err[e.step - 1].second += e.err_kalman;
  }
  double sum_b = 0.0, sum_k = 0.0;
  for (auto& [eb, ek] : result.metrics.per_step_err) {
    eb /= cfg.runs;
    ek /= cfg.runs;
    sum_b += eb;
    sum_k += ek;
  }
  result.metrics.mean_err_bingham = sum_b / cfg.steps;
  result.metrics.mean_err_kalman = sum_k / cfg.steps;
  result.metrics.wallclock =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

RunMetrics simulate(const ScenarioConfig& cfg) { return simulate_detailed(cfg).metrics; }

std::vector<PdfRow> figure_pdf_data(const std::vector<double>& z1_list, int resolution) {
  if (resolution < 2) throw std::invalid_argument("figure_pdf_data: resolution too small");
  std::vector<PdfRow> rows;
  rows.reserve(z1_list.size() * resolution);
  for (double z1 : z1_list) {
    if (!std::isfinite(z1) || z1 > 0.0)
      throw std::domain_error("figure_pdf_data: z1 must be <= 0");
    const BinghamParams p(Eigen::Matrix2d::Identity(), z1);
    for (int j = 0; j < resolution; ++j) {
      const double theta = 2.0 * M_PI * j / resolution;
      rows.push_back(PdfRow{theta, z1, pdf(p, UnitVec2::from_angle(theta))});
    }
  }
  return rows;
}

std::vector<KldRow> figure_kld_data(const std::vector<double>& z1_list) {
  std::vector<KldRow> rows;
  rows.reserve(z1_list.size());
  for (double z1 : z1_list) {
    if (!std::isfinite(z1) || z1 >= 0.0)
      throw std::domain_error("figure_kld_data: z1 must be < 0");
    const double sigma = std::sqrt(angular_variance_of_z1(z1));
    // Bingham angle density renormalized on [0, pi]: 2/F exp(z1 cos^2)
    const double log_p0 = std::log(2.0 / normalization_constant(z1));
    const double log_q0 = -std::log(sigma * std::sqrt(2.0 * M_PI));
    const auto integrand = [&](double t) {
      const double c = std::cos(t);
      const double dm = t - M_PI_2;
      const double log_p = log_p0 + z1 * c * c;
      const double log_q = log_q0 - dm * dm / (2.0 * sigma * sigma);
      return std::exp(log_p) * (log_p - log_q);
    };
    const int n = std::min(200000, 8192 + 64 * static_cast<int>(std::sqrt(std::abs(z1))));
    rows.push_back(KldRow{z1, detail::simpson(integrand, 0.0, M_PI, n)});
  }
  return rows;
}

namespace {

void append_g15(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  line += buf;
}

} // namespace

void write_errors_csv(std::ostream& os, const std::vector<StepError>& rows) {
  os << "step,run,err_bingham_rad,err_kalman_rad\n";
  std::string line;
  for (const StepError& e : rows) {
    line.clear();
    line += std::to_string(e.step);
    line += ',';
    line += std::to_string(e.run);
    line += ',';
    append_g15(line, e.err_bingham);
    line += ',';
    append_g15(line, e.err_kalman);
    line += '\n';
    os << line;
  }
}

void write_pdf_csv(std::ostream& os, const std::vector<PdfRow>& rows) {
  os << "theta_rad,z1,pdf\n";
  std::string line;
  for (const PdfRow& r : rows) {
    line.clear();
    append_g15(line, r.theta);
    line += ',';
    append_g15(line, r.z1);
    line += ',';
    append_g15(line, r.pdf);
    line += '\n';
    os << line;
  }
}

void write_kld_csv(std::ostream& os, const std::vector<KldRow>& rows) {
  os << "z1,kld_nats\n";
  std::string line;
  for (const KldRow& r : rows) {
    line.clear();
    append_g15(line, r.z1);
    line += ',';
    append_g15(line, r.kld);
    line += '\n';
    os << line;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view v, const std::string& key) {
  double x = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc{} || trim({res.ptr, static_cast<std::size_t>(v.data() + v.size() - res.ptr)}).size())
    throw std::invalid_argument("scenario: bad number for key '" + key + "'");
  return x;
}

UnitVec2 parse_unit_vec(std::string_view v, const std::string& key) {
  double a = 0.0, b = 0.0;
  const char* p = v.data();
  const char* end = v.data() + v.size();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{}) throw std::invalid_argument("scenario: bad vector for '" + key + "'");
  p = r1.ptr;
  while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) throw std::invalid_argument("scenario: bad vector for '" + key + "'");
  return UnitVec2(a, b);
}

} // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("scenario: expected 'key = value' line");
    const std::string key{trim(line.substr(0, eq))};
    if (!kv.emplace(key, std::string{trim(line.substr(eq + 1))}).second)
      throw std::invalid_argument("scenario: duplicate key '" + key + "'");
  }

  static const char* known[] = {"steps", "runs",          "seed",
                                "system_noise", "meas_noise",    "initial_state",
                                "initial_estimate", "kalman_q", "kalman_r"};
  for (const auto& [key, value] : kv) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known))
      throw std::invalid_argument("scenario: unknown key '" + key + "'");
  }
  for (const char* required : {"system_noise", "meas_noise", "initial_state", "initial_estimate"}) {
    if (!kv.count(required))
      throw std::invalid_argument {"scenario: missing key '" + std::string(required) + "'"};
  }

  ScenarioConfig cfg;
  if (auto it = kv.find("steps"); it != kv.end())
    cfg.steps = static_cast<int>(parse_double(it->second, "steps"));
  if (auto it = kv.find("runs"); it != kv.end())
    cfg.runs = static_cast<int>(parse_double(it->second, "runs"));
  if (auto it = kv.find("seed"); it != kv.end())
    cfg.seed = static_cast<std::uint64_t>(parse_double(it->second, "seed"));
  cfg.system_noise = parse_params(kv.at("system_noise"));
  cfg.meas_noise = parse_params(kv.at("meas_noise"));
  cfg.initial_state = parse_unit_vec(kv.at("initial_state"), "initial_state");
  cfg.initial_estimate = parse_params(kv.at("initial_estimate"));
  if (auto it = kv.find("kalman_q"); it != kv.end())
    cfg.kalman_q = parse_double(it->second, "kalman_q");
  if (auto it = kv.find("kalman_r"); it != kv.end())
    cfg.kalman_r = parse_double(it->second, "kalman_r");
  if (cfg.steps < 1 || cfg.runs < 1)
    throw std::invalid_argument("scenario: steps and runs must be >= 1");
  return cfg;
}

} // namespace bingham
