#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "surfphase/errors.hpp"
#include "surfphase/fft.hpp"
#include "surfphase/types.hpp"

namespace surfphase {
namespace detail {

// Dense symmetric solve for the tiny normal-equation systems of the
// F-operator (order <= 2 gives at most 6 unknowns).
template <std::size_t M>
std::array<double, M> solve_normal(std::array<std::array<double, M>, M> a,
                                   std::array<double, M> b) {
  for (std::size_t col = 0; col < M; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < M; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0)
      throw internal_error("filters: singular normal equations");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < M; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < M; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, M> x{};
  for (std::size_t i = M; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < M; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

template <std::size_t M>
std::vector<double> least_squares_residual(const std::vector<double>& z,
                                           const std::vector<std::array<double, M>>& basis) {
  std::array<std::array<double, M>, M> ata{};
  std::array<double, M> atz{};
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t r = 0; r < M; ++r) {
      atz[r] += basis[i][r] * z[i];
      for (std::size_t c = 0; c < M; ++c) ata[r][c] += basis[i][r] * basis[i][c];
    }
  }
  const auto coeff = solve_normal<M>(ata, atz);
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    double fit = 0.0;
    for (std::size_t r = 0; r < M; ++r) fit += coeff[r] * basis[i][r];
    out[i] = z[i] - fit;
  }
  return out;
}

enum class TruncateSide { kill_short, kill_long };

// Ideal (brick-wall) truncation of the DFT spectrum of z. Bin k covers
// wavelength P/k with P = n*spacing; conjugate bins are zeroed together so
// the result stays real. kill_long also removes the mean (bin 0).
inline std::vector<double> truncate_spectrum(const std::vector<double>& z,
                                             double spacing, double cutoff,
                                             TruncateSide side) {
  const std::size_t n = z.size();
  auto spectrum = dft_real(z);
  const double period = static_cast<double>(n) * spacing;

  if (side == TruncateSide::kill_long) spectrum[0] = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double wavelength = period / static_cast<double>(k);
    const bool kill = side == TruncateSide::kill_short ? wavelength < cutoff
                                                       : wavelength > cutoff;
    if (kill) {
      spectrum[k] = 0.0;
      if (k != n - k) spectrum[n - k] = 0.0;
    }
  }
  return idft_real(std::move(spectrum));
}

}  // namespace detail

// F-operator: least-squares polynomial form removal of order 1 or 2.
inline Profile detrend(const Profile& p, int order) {
  if (order != 1 && order != 2)
    throw validation_error("filters: detrend order must be 1 or 2");
  const std::size_t n = p.size();
  // abscissa normalized to [-1, 1] to keep the normal equations conditioned
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i)
    t[i] = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1) - 1.0;

  Profile out = p;
  if (order == 1) {
    std::vector<std::array<double, 2>> basis(n);
    for (std::size_t i = 0; i < n; ++i) basis[i] = {1.0, t[i]};
    out.ordinates = detail::least_squares_residual<2>(p.ordinates, basis);
  } else {
    std::vector<std::array<double, 3>> basis(n);
    for (std::size_t i = 0; i < n; ++i) basis[i] = {1.0, t[i], t[i] * t[i]};
    out.ordinates = detail::least_squares_residual<3>(p.ordinates, basis);
  }
  return out;
}

// Areal F-operator: one polynomial of total degree `order` fitted over the
// whole field, not per row.
inline HeightMap detrend(const HeightMap& m, int order) {
  if (order != 1 && order != 2)
    throw validation_error("filters: detrend order must be 1 or 2");
  const std::size_t n = m.size();
  std::vector<double> tx(m.cols), ty(m.rows);
  for (std::size_t c = 0; c < m.cols; ++c)
    tx[c] = 2.0 * static_cast<double>(c) / static_cast<double>(m.cols - 1) - 1.0;
  for (std::size_t r = 0; r < m.rows; ++r)
    ty[r] = m.rows > 1
                ? 2.0 * static_cast<double>(r) / static_cast<double>(m.rows - 1) - 1.0
                : 0.0;

  HeightMap out = m;
  if (order == 1) {
    if (m.rows == 1) {
      std::vector<std::array<double, 2>> basis(n);
      for (std::size_t c = 0; c < m.cols; ++c) basis[c] = {1.0, tx[c]};
      out.grid = detail::least_squares_residual<2>(m.grid, basis);
    } else {
      std::vector<std::array<double, 3>> basis(n);
      for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
          basis[r * m.cols + c] = {1.0, tx[c], ty[r]};
      out.grid = detail::least_squares_residual<3>(m.grid, basis);
    }
  } else if (m.rows >= 3) {
    std::vector<std::array<double, 6>> basis(n);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        basis[r * m.cols + c] = {1.0,          tx[c],         ty[r],
                                 tx[c] * tx[c], tx[c] * ty[r], ty[r] * ty[r]};
    out.grid = detail::least_squares_residual<6>(m.grid, basis);
  } else if (m.rows == 2) {
    // y^2 is degenerate with two rows
    std::vector<std::array<double, 5>> basis(n);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        basis[r * m.cols + c] = {1.0, tx[c], ty[r], tx[c] * tx[c], tx[c] * ty[r]};
    out.grid = detail::least_squares_residual<5>(m.grid, basis);
  } else {
    std::vector<std::array<double, 3>> basis(n);
    for (std::size_t c = 0; c < m.cols; ++c) basis[c] = {1.0, tx[c], tx[c] * tx[c]};
    out.grid = detail::least_squares_residual<3>(m.grid, basis);
  }
  return out;
}

// S-filter: ideal low-pass. Every spectral component with wavelength shorter
// than the cutoff is removed; band.ls becomes the cutoff.
inline Profile s_filter(const Profile& p, double cutoff) {
  if (!(cutoff >= 2.0 * p.spacing))
    throw validation_error(
        "filters: S-filter cutoff below the Nyquist limit 2*spacing");
  if (!(cutoff <= p.band.lc))
    throw validation_error("filters: S-filter cutoff exceeds the L-filter cutoff");
  Profile out = p;
  out.ordinates = detail::truncate_spectrum(p.ordinates, p.spacing, cutoff,
                                            detail::TruncateSide::kill_short);
  out.band.ls = cutoff;
  return out;
}

inline HeightMap s_filter(const HeightMap& m, double cutoff) {
  if (!(cutoff >= 2.0 * m.spacing_x) || (m.rows > 1 && !(cutoff >= 2.0 * m.spacing_y)))
    throw validation_error(
        "filters: S-filter cutoff below the Nyquist limit 2*spacing");
  HeightMap out = m;
  std::vector<double> lane;
  for (std::size_t r = 0; r < m.rows; ++r) {
    lane.assign(out.grid.begin() + r * m.cols, out.grid.begin() + (r + 1) * m.cols);
    lane = detail::truncate_spectrum(lane, m.spacing_x, cutoff,
                                     detail::TruncateSide::kill_short);
    std::copy(lane.begin(), lane.end(), out.grid.begin() + r * m.cols);
  }
  if (m.rows >= 3) {
    lane.resize(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (std::size_t r = 0; r < m.rows; ++r) lane[r] = out.at(r, c);
      lane = detail::truncate_spectrum(lane, m.spacing_y, cutoff,
                                       detail::TruncateSide::kill_short);
      for (std::size_t r = 0; r < m.rows; ++r) out.at(r, c) = lane[r];
    }
  }
  out.band.ls = cutoff;
  return out;
}

// L-filter: ideal high-pass. Components with wavelength longer than the
// cutoff are removed, including the mean, so the output is zero-mean.
inline Profile l_filter(const Profile& p, double cutoff) {
  if (!(cutoff <= p.length()))
    throw validation_error("filters: L-filter cutoff exceeds the profile length");
  if (!(cutoff >= p.band.ls))
    throw validation_error("filters: L-filter cutoff below the S-filter cutoff");
  Profile out = p;
  out.ordinates = detail::truncate_spectrum(p.ordinates, p.spacing, cutoff,
                                            detail::TruncateSide::kill_long);
  out.band.lc = cutoff;
  return out;
}

inline HeightMap l_filter(const HeightMap& m, double cutoff) {
  if (!(cutoff <= m.width()) || (m.rows >= 3 && !(cutoff <= m.height())))
    throw validation_error("filters: L-filter cutoff exceeds the field size");
  HeightMap out = m;
  std::vector<double> lane;
  for (std::size_t r = 0; r < m.rows; ++r) {
    lane.assign(out.grid.begin() + r * m.cols, out.grid.begin() + (r + 1) * m.cols);
    lane = detail::truncate_spectrum(lane, m.spacing_x, cutoff,
                                     detail::TruncateSide::kill_long);
    std::copy(lane.begin(), lane.end(), out.grid.begin() + r * m.cols);
  }
  if (m.rows >= 3) {
    lane.resize(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (std::size_t r = 0; r < m.rows; ++r) lane[r] = out.at(r, c);
      lane = detail::truncate_spectrum(lane, m.spacing_y, cutoff,
                                       detail::TruncateSide::kill_long);
      for (std::size_t r = 0; r < m.rows; ++r) out.at(r, c) = lane[r];
    }
  }
  out.band.lc = cutoff;
  return out;
}

// Pulls one row out of a map as a profile; it inherits the map's band.
inline Profile extract_profile(const HeightMap& m, std::size_t row_index) {
  if (row_index >= m.rows)
    throw validation_error("filters: row index " + std::to_string(row_index) +
                           " out of range (rows = " + std::to_string(m.rows) + ")");
  std::vector<double> row(m.grid.begin() + row_index * m.cols,
                          m.grid.begin() + (row_index + 1) * m.cols);
  return make_profile(std::move(row), m.spacing_x, m.band,
                      "row " + std::to_string(row_index));
}

}  // namespace surfphase
