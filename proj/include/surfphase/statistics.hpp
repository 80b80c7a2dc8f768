#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "surfphase/errors.hpp"
#include "surfphase/fft.hpp"
#include "surfphase/synthesis.hpp"
#include "surfphase/types.hpp"

namespace surfphase {

// Population (1/N) moments. Kurtosis is raw (Gaussian = 3), not excess.
struct MomentSet {
  double mean = 0.0;
  double rq = 0.0;  // standard deviation; Rq / sigma for a height ensemble
  double min = 0.0;
  double max = 0.0;
  std::optional<double> skewness;  // unset when the variance is zero
  std::optional<double> kurtosis;
};

inline MomentSet moments(std::span<const double> values) {
  if (values.size() < 2)
    throw validation_error("statistics: moments need at least 2 values");
  const double n = static_cast<double>(values.size());
  MomentSet out;
  out.min = values[0];
  out.max = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    out.min = std::min(out.min, v);
    out.max = std::max(out.max, v);
  }
  out.mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - out.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  out.rq = std::sqrt(m2);
  if (m2 > 0.0) {
    out.skewness = m3 / (m2 * out.rq);
    out.kurtosis = m4 / (m2 * m2);
  }
  return out;
}

// Central-difference gradients at interior points; endpoints carry no slope.
struct SlopeSeries {
  std::vector<double> values;  // dimensionless dz/dx, length N-2
  double spacing = 0.0;
  double rms_slope = 0.0;  // RΔq, rms about zero
};

inline SlopeSeries gradient(const Profile& p) {
  if (p.size() < 3)
    throw validation_error("statistics: gradient needs at least 3 ordinates");
  SlopeSeries s;
  s.spacing = p.spacing;
  s.values.resize(p.size() - 2);
  const double inv = 1.0 / (2.0 * p.spacing);
  double sq = 0.0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double g = (p.ordinates[i + 1] - p.ordinates[i - 1]) * inv;
    s.values[i - 1] = g;
    sq += g * g;
  }
  s.rms_slope = std::sqrt(sq / static_cast<double>(s.values.size()));
  return s;
}

// Arc length (profiles) or true area (maps) by trapezoidal quadrature of
// sqrt(1 + |grad z|^2) over the interior points. The nominal reference is
// the projected length/area of the same interior support, so a flat input
// gives excess exactly 1.
struct ArcResult {
  double value = 0.0;    // µm (profile) or µm^2 (map)
  double nominal = 0.0;  // projected counterpart
  double excess = 1.0;   // value / nominal
};

inline ArcResult arc_area(const Profile& p) {
  const SlopeSeries s = gradient(p);
  const std::size_t m = s.values.size();
  double sum = 0.0;
  for (double g : s.values) sum += std::sqrt(1.0 + g * g);
  const double ends =
      0.5 * (std::sqrt(1.0 + s.values.front() * s.values.front()) +
             std::sqrt(1.0 + s.values.back() * s.values.back()));
  ArcResult r;
  r.value = p.spacing * (sum - ends);
  r.nominal = p.spacing * static_cast<double>(m - 1);
  r.excess = r.nominal > 0.0 ? r.value / r.nominal : 1.0;
  return r;
}

inline ArcResult arc_area(const HeightMap& m) {
  if (m.rows < 3 || m.cols < 3)
    throw validation_error("statistics: areal arc needs at least a 3x3 grid");
  const double ix = 1.0 / (2.0 * m.spacing_x);
  const double iy = 1.0 / (2.0 * m.spacing_y);
  const std::size_t ri = m.rows - 2, ci = m.cols - 2;
  double sum = 0.0;
  for (std::size_t r = 1; r + 1 < m.rows; ++r) {
    const double wy = (r == 1 || r == m.rows - 2) ? 0.5 : 1.0;
    for (std::size_t c = 1; c + 1 < m.cols; ++c) {
      const double wx = (c == 1 || c == m.cols - 2) ? 0.5 : 1.0;
      const double gx = (m.at(r, c + 1) - m.at(r, c - 1)) * ix;
      const double gy = (m.at(r + 1, c) - m.at(r - 1, c)) * iy;
      sum += wx * wy * std::sqrt(1.0 + gx * gx + gy * gy);
    }
  }
  ArcResult out;
  out.value = sum * m.spacing_x * m.spacing_y;
  out.nominal = static_cast<double>(ci - 1) * m.spacing_x *
                static_cast<double>(ri - 1) * m.spacing_y;
  out.excess = out.nominal > 0.0 ? out.value / out.nominal : 1.0;
  return out;
}

// Amplitude spectrum of a profile, normalized so that sum A_k^2 / 2 equals
// the variance (Parseval). The mean is subtracted before the transform. For
// even N the Nyquist bin is scaled by sqrt(2)/N instead of 2/N, which is
// what keeps the Parseval identity exact.
inline SpectralModel periodogram(const Profile& p) {
  const std::size_t n = p.size();
  std::vector<double> z = p.ordinates;
  double mean = 0.0;
  for (double v : z) mean += v;
  mean /= static_cast<double>(n);
  for (double& v : z) v -= mean;

  const auto spectrum = dft_real(z);
  SpectralModel out;
  out.k_min = 1;
  out.k_max = static_cast<int>(n / 2);
  out.record_length = static_cast<double>(n) * p.spacing;
  out.amplitudes.resize(static_cast<std::size_t>(out.k_max));
  for (int k = 1; k <= out.k_max; ++k) {
    const double mag = std::abs(spectrum[static_cast<std::size_t>(k)]);
    const bool nyquist = (n % 2 == 0) && (k == out.k_max);
    out.amplitudes[static_cast<std::size_t>(k - 1)] =
        (nyquist ? std::numbers::sqrt2 : 2.0) * mag / static_cast<double>(n);
  }
  return out;
}

// Greenwood-Williamson plasticity index, psi = (E*/H) * sqrt(sigma/beta).
inline double plasticity_index(double e_star, double hardness, double sigma,
                               double beta) {
  if (!(e_star > 0.0) || !(hardness > 0.0) || !(sigma > 0.0) || !(beta > 0.0))
    throw validation_error("statistics: plasticity index needs positive inputs");
  return e_star / hardness * std::sqrt(sigma / beta);
}

}  // namespace surfphase
