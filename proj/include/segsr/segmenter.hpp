#pragma once

#include "segsr/rd_sampler.hpp"
#include "segsr/types.hpp"

namespace segsr {

/// One segment of the sliding reconstruction: the coefficient window of S
/// pulses, the measurement window of S+1 pulse-blocks, and the two boundary
/// matrices that couple it to its neighbours. All matrices are copies taken
/// from the parent A, so a view is immutable and thread-safe.
///
/// Windows (0-based): coefficients [coeff_start, coeff_start + S*Np),
/// measurements [meas_start, meas_start + (S+1)*Mp) with
/// coeff_start = (l-1)*W*Np and meas_start = coeff_start/R, except that the
/// final segment is clamped so its coefficient window ends exactly at N.
struct SegmentView {
  int index = 0;  // l, 1-based

  Index coeff_start = 0, coeff_len = 0;  // n~, N~
  Index meas_start = 0, meas_len = 0;    // m~, M~
  Index prev_start = 0, prev_len = 0;    // slid-out block [prev_start, coeff_start); empty at l=1
  Index next_len = 0;                    // next pulse block [coeff_start+coeff_len, +Np); 0 at l=L

  Matrix sub_matrix;     // M~ x N~, A restricted to (meas window x coeff window)
  Matrix boundary_prev;  // M~ x prev_len, columns that slid out of the window
  Matrix boundary_next;  // M~ x next_len, the one block intruding from above
  Vector raw;            // y~, the raw measurement window

  Index pulse_len = 0;   // Np
  Index pulse_meas = 0;  // Mp
  int segment_pulses = 0;

  Index next_start() const { return coeff_start + coeff_len; }
};

/// Start of segment l's coefficient window; clamped for the final segment.
Index segment_coeff_start(const RadarConfig& config, int l);

SegmentView segment_view(const MeasurementMatrix& matrix, const Vector& y, int l);

/// Residual of the exact decomposition
///   y~ = B_prev*sigma_slid + A~*sigma~ + B_next*sigma_next
/// for a noiseless y = A*sigma; a structural self-test, zero up to roundoff.
double decompose_check(const SegmentView& view, const Vector& sigma);

struct VirtualMeasurement {
  Vector y_virt;
  IndexList subtracted_support;  // indices (segment-local) of the previous estimate used
};

/// y_virt = y~ - B_prev * prev_first_block (plain y~ at l=1).
/// prev_first_block is the previous segment's estimate of the slid-out block,
/// length prev_len; required for l >= 2.
VirtualMeasurement virtual_measurement(const SegmentView& view, const Vector* prev_first_block);

/// Oracle decomposition of the virtual noise (simulation only): the forward
/// part is the previous segment's estimation error pushed through
/// boundary_prev, the backward part is the not-yet-measured next block pushed
/// through boundary_next. Row supports are [0, W*Mp) and [M~-Mp, M~).
struct VirtualNoise {
  Vector n_virt;
  Vector forward_part;
  Vector backward_part;
};

VirtualNoise oracle_virtual_noise(const SegmentView& view, const Vector& sigma,
                                  const Vector* prev_first_block_estimate);

} // namespace segsr
