#include "segsr/radar_model.hpp"

#include <cmath>
#include <random>

#include "segsr/rng.hpp"

namespace segsr {

namespace {

Index checked_integer(double value, const char* what) {
  const double rounded = std::llround(value);
  if (std::abs(value - rounded) > 1e-6 * std::max(1.0, std::abs(value))) {
    throw NonIntegralDimensions(std::string(what) + " is not integral: " + std::to_string(value));
  }
  return static_cast<Index>(rounded);
}

} // namespace

RadarConfig make_config(double bandwidth_hz, double pulse_width_s, double receive_time_s,
                        int downsample_ratio, int segment_pulses, int slide_pulses) {
  if (bandwidth_hz <= 0 || pulse_width_s <= 0 || receive_time_s <= 0) {
    throw NonIntegralDimensions("B, Tp, T must be positive");
  }
  if (downsample_ratio <= 1) {
    throw NonIntegralDimensions("downsample ratio R must be an integer > 1");
  }

  RadarConfig c;
  c.bandwidth_hz = bandwidth_hz;
  c.pulse_width_s = pulse_width_s;
  c.receive_time_s = receive_time_s;
  c.downsample_ratio = downsample_ratio;
  c.segment_pulses = segment_pulses;
  c.slide_pulses = slide_pulses;
  c.nyquist_interval_s = 1.0 / bandwidth_hz;
  c.integration_time_s = downsample_ratio * c.nyquist_interval_s;
  c.chip_rate_hz = bandwidth_hz;

  c.pulse_samples = checked_integer(pulse_width_s * bandwidth_hz, "Np = Tp*B");
  c.pulse_count = checked_integer(receive_time_s / pulse_width_s, "P = T/Tp");
  if (c.pulse_samples % downsample_ratio != 0) {
    throw NonIntegralDimensions("Np = Tp*B must be divisible by R");
  }
  c.pulse_measurements = c.pulse_samples / downsample_ratio;
  c.coeff_length = (c.pulse_count - 1) * c.pulse_samples;
  c.measurement_length = c.pulse_count * c.pulse_measurements;

  if (segment_pulses < 2 || segment_pulses >= c.pulse_count) {
    throw InvalidSegmentLength("segment length S must satisfy 2 <= S < P");
  }
  if (slide_pulses < 1 || slide_pulses >= segment_pulses) {
    throw InvalidSlide("slide width W must satisfy 1 <= W < S");
  }

  // L = ceil((P-1-S)/W) + 1; reduces to P - S when W = 1.
  const Index span = c.pulse_count - 1 - segment_pulses;
  c.segment_count = (span + slide_pulses - 1) / slide_pulses + 1;
  return c;
}

RadarConfig config_from_counts(Index pulse_samples, int downsample_ratio, Index pulse_count,
                               int segment_pulses, int slide_pulses) {
  return make_config(static_cast<double>(pulse_samples), 1.0, static_cast<double>(pulse_count),
                     downsample_ratio, segment_pulses, slide_pulses);
}

Waveform lfm_waveform(const RadarConfig& config) {
  const Index np = config.pulse_samples;
  Waveform w;
  w.chirp_rate = config.bandwidth_hz / config.pulse_width_s;
  w.samples.resize(np);
  for (Index j = 0; j < np; ++j) {
    const double u = static_cast<double>(j) - static_cast<double>(np) / 2.0;
    w.samples[j] = std::cos(M_PI / static_cast<double>(np) * u * u);
  }
  return w;
}

Waveform constant_waveform(const RadarConfig& config) {
  Waveform w;
  w.chirp_rate = 0;
  w.samples = Vector::Ones(config.pulse_samples);
  return w;
}

TargetScene random_scene(const RadarConfig& config, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw ConfigInvalid("scene probability p must lie in [0,1]");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TargetScene scene;
  scene.bernoulli_p = p;
  scene.coefficients = Vector::Zero(config.coeff_length);
  for (Index j = 0; j < config.coeff_length; ++j) {
    const double hit = unit(rng);
    const double amp = unit(rng);  // always drawn: support and amplitudes stay aligned
    if (hit < p) {
      scene.coefficients[j] = 1.0 - amp;  // Uniform(0,1]
      if (scene.coefficients[j] == 0.0) scene.coefficients[j] = 1.0;
      scene.support.push_back(j);
    }
  }
  return scene;
}

TargetScene scene_from_coefficients(Vector coefficients) {
  TargetScene scene;
  scene.coefficients = std::move(coefficients);
  for (Index j = 0; j < scene.coefficients.size(); ++j) {
    if (scene.coefficients[j] != 0.0) scene.support.push_back(j);
  }
  return scene;
}

Vector synthesize_nyquist(const TargetScene& scene, const Waveform& waveform,
                          const RadarConfig& config) {
  if (scene.coefficients.size() != config.coeff_length) {
    throw DimensionMismatch("scene length does not match config N");
  }
  if (waveform.samples.size() != config.pulse_samples) {
    throw DimensionMismatch("waveform length does not match config Np");
  }
  const Index np = config.pulse_samples;
  Vector x = Vector::Zero(config.pulse_count * np);
  for (Index n : scene.support) {
    x.segment(n, np) += scene.coefficients[n] * waveform.samples;
  }
  return x;
}

NoiseSpec NoiseSpec::from_psd(double n0, const RadarConfig& config, std::uint64_t seed) {
  if (n0 < 0) throw ConfigInvalid("noise PSD N0 must be >= 0");
  NoiseSpec s;
  s.per_sample_variance = n0 * config.bandwidth_hz / 2.0;
  s.seed = seed;
  return s;
}

NoiseSpec NoiseSpec::from_variance(double variance, std::uint64_t seed) {
  if (variance < 0) throw ConfigInvalid("noise variance must be >= 0");
  NoiseSpec s;
  s.per_sample_variance = variance;
  s.seed = seed;
  return s;
}

NoiseSpec NoiseSpec::from_isnr_db(double isnr_db, std::uint64_t seed) {
  NoiseSpec s;
  s.target_isnr_db = isnr_db;
  s.seed = seed;
  return s;
}

NoisySignal add_noise(const Vector& x, const NoiseSpec& spec) {
  double variance = spec.per_sample_variance;
  const double mean_power = x.squaredNorm() / static_cast<double>(x.size());
  if (!std::isnan(spec.target_isnr_db)) {
    variance = mean_power / std::pow(10.0, spec.target_isnr_db / 10.0);
  }
  NoisySignal out;
  out.noise_variance = variance;
  if (variance == 0.0) {
    out.samples = x;
    out.realized_isnr_db = std::numeric_limits<double>::infinity();
    return out;
  }
  auto rng = make_rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
  out.samples = x;
  for (Index i = 0; i < out.samples.size(); ++i) out.samples[i] += gauss(rng);
  out.realized_isnr_db = 10.0 * std::log10(mean_power / variance);
  return out;
}

} // namespace segsr
