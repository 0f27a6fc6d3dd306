#include "segsr/rd_sampler.hpp"

#include <cstdio>
#include <cstring>
#include <memory>
#include <random>

#include "segsr/rng.hpp"

namespace segsr {

ChippingSequence make_chipping(const RadarConfig& config, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  ChippingSequence c;
  c.seed = seed;
  c.chips.resize(config.pulse_count * config.pulse_samples);
  for (Index k = 0; k < c.chips.size(); ++k) c.chips[k] = coin(rng) ? 1.0 : -1.0;
  return c;
}

Index column_band_first(const RadarConfig& config, Index n) {
  return n / config.downsample_ratio;
}

Index column_band_last(const RadarConfig& config, Index n) {
  const Index r = config.downsample_ratio;
  const Index ceil_n_r = (n + r - 1) / r;
  return config.pulse_measurements + ceil_n_r - 1;
}

MeasurementMatrix build_measurement_matrix(const RadarConfig& config, const Waveform& waveform,
                                           const ChippingSequence& chipping,
                                           bool normalize_columns) {
  if (waveform.samples.size() != config.pulse_samples) {
    throw DimensionMismatch("waveform length does not match config Np");
  }
  if (chipping.chips.size() < config.pulse_count * config.pulse_samples) {
    throw DimensionMismatch("chipping sequence shorter than P*Np");
  }
  const Index r = config.downsample_ratio;
  const Index np = config.pulse_samples;
  const Index m_total = config.measurement_length;
  const Index n_total = config.coeff_length;

  MeasurementMatrix out;
  out.config = config;
  out.entries = Matrix::Zero(m_total, n_total);
  out.band_first.resize(n_total);
  out.band_last.resize(n_total);
  for (Index n = 0; n < n_total; ++n) {
    const Index lo = column_band_first(config, n);
    const Index hi = std::min(column_band_last(config, n), m_total - 1);
    out.band_first[n] = lo;
    out.band_last[n] = hi;
    for (Index m = lo; m <= hi; ++m) {
      double acc = 0.0;
      for (Index k = m * r; k < (m + 1) * r; ++k) {
        const Index j = k - n;
        if (j >= 0 && j < np) acc += chipping.chips[k] * waveform.samples[j];
      }
      out.entries(m, n) = acc;
    }
    if (normalize_columns) {
      const double norm = out.entries.col(n).norm();
      if (norm > 0) out.entries.col(n) /= norm;
    }
  }
  out.normalized = normalize_columns;
  return out;
}

Measurements rd_sample(const Vector& nyquist_signal, const ChippingSequence& chipping,
                       const RadarConfig& config) {
  const Index needed = config.pulse_count * config.pulse_samples;
  if (nyquist_signal.size() < needed) {
    throw DimensionMismatch("nyquist signal shorter than P*Np");
  }
  if (chipping.chips.size() < needed) {
    throw DimensionMismatch("chipping sequence shorter than P*Np");
  }
  const Index r = config.downsample_ratio;
  Measurements out;
  out.y.resize(config.measurement_length);
  for (Index m = 0; m < config.measurement_length; ++m) {
    double acc = 0.0;
    for (Index k = m * r; k < (m + 1) * r; ++k) acc += chipping.chips[k] * nyquist_signal[k];
    out.y[m] = acc;
  }
  return out;
}

namespace {

constexpr char kMatrixMagic[8] = {'S', 'E', 'G', 'S', 'R', 'A', '0', '1'};
constexpr char kVectorMagic[8] = {'S', 'E', 'G', 'S', 'R', 'Y', '0', '1'};

struct FileCloser {
  void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_all(std::FILE* f, const void* data, size_t bytes, const std::string& path) {
  if (std::fwrite(data, 1, bytes, f) != bytes) throw IoError("short write to " + path);
}

void read_all(std::FILE* f, void* data, size_t bytes, const std::string& path) {
  if (std::fread(data, 1, bytes, f) != bytes) throw IoError("short read from " + path);
}

void write_header(std::FILE* f, const char magic[8], const RadarConfig& c, std::uint64_t rows,
                  std::uint64_t cols, const std::string& path) {
  write_all(f, magic, 8, path);
  const double scalars[3] = {c.bandwidth_hz, c.pulse_width_s, c.receive_time_s};
  write_all(f, scalars, sizeof scalars, path);
  const std::uint64_t ints[5] = {static_cast<std::uint64_t>(c.downsample_ratio),
                                 static_cast<std::uint64_t>(c.segment_pulses),
                                 static_cast<std::uint64_t>(c.slide_pulses), rows, cols};
  write_all(f, ints, sizeof ints, path);
}

RadarConfig read_header(std::FILE* f, const char magic[8], std::uint64_t& rows,
                        std::uint64_t& cols, const std::string& path) {
  char got[8];
  read_all(f, got, 8, path);
  if (std::memcmp(got, magic, 8) != 0) throw IoError("bad magic in " + path);
  double scalars[3];
  read_all(f, scalars, sizeof scalars, path);
  std::uint64_t ints[5];
  read_all(f, ints, sizeof ints, path);
  rows = ints[3];
  cols = ints[4];
  return make_config(scalars[0], scalars[1], scalars[2], static_cast<int>(ints[0]),
                     static_cast<int>(ints[1]), static_cast<int>(ints[2]));
}

} // namespace

void save_matrix(const std::string& path, const MeasurementMatrix& matrix) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open " + path + " for writing");
  const auto rows = static_cast<std::uint64_t>(matrix.entries.rows());
  const auto cols = static_cast<std::uint64_t>(matrix.entries.cols());
  write_header(f.get(), kMatrixMagic, matrix.config, rows, cols, path);
  for (Index r = 0; r < matrix.entries.rows(); ++r) {
    for (Index c = 0; c < matrix.entries.cols(); ++c) {
      const double v = matrix.entries(r, c);
      write_all(f.get(), &v, sizeof v, path);
    }
  }
}

MeasurementMatrix load_matrix(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open " + path);
  std::uint64_t rows = 0, cols = 0;
  MeasurementMatrix out;
  out.config = read_header(f.get(), kMatrixMagic, rows, cols, path);
  if (rows != static_cast<std::uint64_t>(out.config.measurement_length) ||
      cols != static_cast<std::uint64_t>(out.config.coeff_length)) {
    throw IoError("matrix dimensions in " + path + " do not match its config header");
  }
  out.entries.resize(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index r = 0; r < out.entries.rows(); ++r) {
    for (Index c = 0; c < out.entries.cols(); ++c) {
      double v;
      read_all(f.get(), &v, sizeof v, path);
      out.entries(r, c) = v;
    }
  }
  out.band_first.resize(cols);
  out.band_last.resize(cols);
  for (Index n = 0; n < out.entries.cols(); ++n) {
    out.band_first[n] = column_band_first(out.config, n);
    out.band_last[n] = std::min(column_band_last(out.config, n), out.entries.rows() - 1);
  }
  return out;
}

void save_vector(const std::string& path, const Vector& v, const RadarConfig& config) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_header(f.get(), kVectorMagic, config, static_cast<std::uint64_t>(v.size()), 1, path);
  for (Index i = 0; i < v.size(); ++i) {
    const double x = v[i];
    write_all(f.get(), &x, sizeof x, path);
  }
}

Vector load_vector(const std::string& path, RadarConfig* config_out) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open " + path);
  std::uint64_t rows = 0, cols = 0;
  RadarConfig config = read_header(f.get(), kVectorMagic, rows, cols, path);
  if (cols != 1) throw IoError("vector file " + path + " has cols != 1");
  Vector v(static_cast<Index>(rows));
  for (Index i = 0; i < v.size(); ++i) {
    double x;
    read_all(f.get(), &x, sizeof x, path);
    v[i] = x;
  }
  if (config_out) *config_out = config;
  return v;
}

} // namespace segsr
