#pragma once

#include <cstdint>
#include <limits>

#include "segsr/types.hpp"

namespace segsr {

/// System parameters of the pulsed-radar / RD acquisition chain, plus every
/// derived dimension the rest of the library needs. Internally time is
/// normalized so one Nyquist interval is one unit; integrals over chips
/// become plain sums, which cancels a global scale that appears in no metric.
struct RadarConfig {
  double bandwidth_hz = 0;    // B
  double pulse_width_s = 0;   // Tp
  double receive_time_s = 0;  // T
  int downsample_ratio = 0;   // R > 1
  int segment_pulses = 0;     // S, 2 <= S < P
  int slide_pulses = 0;       // W, 1 <= W < S

  double nyquist_interval_s = 0;  // tau0 = 1/B
  double integration_time_s = 0;  // Tint = R*tau0
  double chip_rate_hz = 0;        // Bp (= B; finer chipping out of scope)

  Index pulse_samples = 0;       // Np = Tp*B
  Index pulse_measurements = 0;  // Mp = Np/R
  Index pulse_count = 0;         // P = T/Tp
  Index coeff_length = 0;        // N = (P-1)*Np
  Index measurement_length = 0;  // M = P*Mp
  Index segment_count = 0;       // L (= P-S when W = 1)

  Index segment_coeff_length() const { return segment_pulses * pulse_samples; }        // N~
  Index segment_meas_length() const { return (segment_pulses + 1) * pulse_measurements; }  // M~
};

RadarConfig make_config(double bandwidth_hz, double pulse_width_s, double receive_time_s,
                        int downsample_ratio, int segment_pulses, int slide_pulses);

/// Convenience constructor from sample counts: B = Np Hz, Tp = 1 s, T = P s.
/// All library quantities are invariant to this choice of units.
RadarConfig config_from_counts(Index pulse_samples, int downsample_ratio, Index pulse_count,
                               int segment_pulses, int slide_pulses);

/// One transmit pulse sampled on the Nyquist grid; samples[j] = s(j*tau0).
struct Waveform {
  Vector samples;         // length Np, zero outside [0, Tp) by construction
  double chirp_rate = 0;  // gamma = B/Tp for the LFM pulse, 0 for the flat test pulse
};

/// LFM pulse cos(gamma*pi*(t - Tp/2)^2) sampled at left endpoints j*tau0.
/// In normalized units this is cos(pi/Np * (j - Np/2)^2).
Waveform lfm_waveform(const RadarConfig& config);

/// All-ones pulse (zero chirp rate); handy for hand-checkable tests.
Waveform constant_waveform(const RadarConfig& config);

/// Sparse target scene: coefficient vector sigma with support Gamma.
struct TargetScene {
  Vector coefficients;  // length N; nonzero exactly on the support
  IndexList support;    // sorted
  double bernoulli_p = 0;

  Index sparsity() const { return static_cast<Index>(support.size()); }
};

/// Bernoulli(p) support with Uniform(0,1] amplitudes, per-index independent.
TargetScene random_scene(const RadarConfig& config, double p, std::uint64_t seed);

/// Wraps an explicit coefficient vector, deriving its support.
TargetScene scene_from_coefficients(Vector coefficients);

/// Nyquist-rate synthesis x = Psi*sigma: superposition of delayed pulses.
/// Output has P*Np samples so the echo of every admissible delay (<= T - Tp)
/// is fully contained.
Vector synthesize_nyquist(const TargetScene& scene, const Waveform& waveform,
                          const RadarConfig& config);

/// Band-limited white noise description. The discrete equivalent of PSD N0/2
/// over bandwidth B/2 is an i.i.d. Gaussian of variance N0*B/2 per Nyquist
/// sample; alternatively a target ISNR picks the variance from the signal.
struct NoiseSpec {
  double per_sample_variance = 0;
  double target_isnr_db = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;

  static NoiseSpec from_psd(double n0, const RadarConfig& config, std::uint64_t seed);
  static NoiseSpec from_variance(double variance, std::uint64_t seed);
  static NoiseSpec from_isnr_db(double isnr_db, std::uint64_t seed);
};

struct NoisySignal {
  Vector samples;
  double noise_variance = 0;
  double realized_isnr_db = std::numeric_limits<double>::infinity();
};

NoisySignal add_noise(const Vector& x, const NoiseSpec& spec);

} // namespace segsr
