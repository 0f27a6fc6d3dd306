#pragma once

#include <cstdint>
#include <string>

#include "segsr/radar_model.hpp"
#include "segsr/types.hpp"

namespace segsr {

/// Rademacher +-1 mixing sequence at chip rate Bp = B, one chip per Nyquist
/// interval, P*Np chips in total.
struct ChippingSequence {
  Vector chips;
  std::uint64_t seed = 0;
};

ChippingSequence make_chipping(const RadarConfig& config, std::uint64_t seed);

/// First (inclusive) and last (inclusive) row that can be nonzero in column n:
/// rows [floor(n/R), Mp + ceil(n/R) - 1], at most Mp+1 consecutive rows.
Index column_band_first(const RadarConfig& config, Index n);
Index column_band_last(const RadarConfig& config, Index n);

/// The M x N banded measurement matrix A of the RD chain applied to the
/// waveform-matched dictionary. Entries outside the band are exact zeros.
struct MeasurementMatrix {
  Matrix entries;
  std::vector<Index> band_first;  // per column, inclusive
  std::vector<Index> band_last;   // per column, inclusive
  RadarConfig config;
  bool normalized = false;
};

/// A[m][n] = sum_{k=m*R}^{(m+1)*R-1} chips[k] * samples[k-n], samples taken as
/// zero outside [0, Np). With normalize_columns the columns are scaled to unit
/// l2 norm (solver experiments only; never used by the acceptance suite).
MeasurementMatrix build_measurement_matrix(const RadarConfig& config, const Waveform& waveform,
                                           const ChippingSequence& chipping,
                                           bool normalize_columns = false);

struct Measurements {
  Vector y;
  double noise_variance = 0;
  double realized_isnr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

/// Integrate-and-dump sampling: y[m] = sum over chip block m of chips * signal.
Measurements rd_sample(const Vector& nyquist_signal, const ChippingSequence& chipping,
                       const RadarConfig& config);

/// Binary reproducibility dumps. Layout (little endian):
///   8-byte magic ("SEGSRA01" matrix / "SEGSRY01" vector),
///   f64 B_hz, f64 Tp_s, f64 T_s, u64 R, u64 S, u64 W,
///   u64 rows, u64 cols, then rows*cols f64 row-major payload.
void save_matrix(const std::string& path, const MeasurementMatrix& matrix);
MeasurementMatrix load_matrix(const std::string& path);
void save_vector(const std::string& path, const Vector& v, const RadarConfig& config);
Vector load_vector(const std::string& path, RadarConfig* config_out = nullptr);

} // namespace segsr
