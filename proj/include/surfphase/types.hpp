#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surfphase/errors.hpp"

namespace surfphase {

// Wavelength band a sampled surface is evaluated over, in µm.
// ls = shortest representable wavelength (2·δr at native sampling),
// lc = long-wavelength cutoff. lc == ls only in the degenerate minimal case
// (N = 3 at native sampling).
struct EvaluationBand {
  double ls = 0.0;
  double lc = 0.0;
};

inline void validate_band(const EvaluationBand& b) {
  if (!(b.ls > 0.0))
    throw validation_error("types: evaluation band requires ls > 0");
  if (!(b.lc >= b.ls))
    throw validation_error("types: evaluation band requires lc >= ls");
}

// 1-D sampled surface section: ordinates in µm at uniform lateral spacing.
// Immutable by convention — every operation takes a const reference and
// returns a new value.
struct Profile {
  std::vector<double> ordinates;  // µm
  double spacing = 0.0;           // δr, µm
  EvaluationBand band;
  std::string label;

  std::size_t size() const { return ordinates.size(); }
  double length() const {
    return static_cast<double>(ordinates.size() - 1) * spacing;
  }
};

inline Profile make_profile(std::vector<double> ordinates, double spacing,
                            EvaluationBand band = {}, std::string label = {}) {
  if (ordinates.size() < 3)
    throw validation_error("types: a profile needs at least 3 ordinates");
  if (!(spacing > 0.0))
    throw validation_error("types: profile spacing must be positive");
  Profile p;
  p.ordinates = std::move(ordinates);
  p.spacing = spacing;
  p.label = std::move(label);
  if (band.ls == 0.0 && band.lc == 0.0)
    band = EvaluationBand{2.0 * spacing, p.length()};
  validate_band(band);
  p.band = band;
  return p;
}

// 2-D sampled surface: row-major grid of ordinates in µm.
struct HeightMap {
  std::vector<double> grid;  // rows*cols, row-major
  std::size_t rows = 0;
  std::size_t cols = 0;
  double spacing_x = 0.0;  // µm, along a row
  double spacing_y = 0.0;  // µm, across rows
  EvaluationBand band;

  double at(std::size_t r, std::size_t c) const { return grid[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return grid[r * cols + c]; }
  std::size_t size() const { return grid.size(); }
  double width() const { return static_cast<double>(cols - 1) * spacing_x; }
  double height() const {
    return rows > 1 ? static_cast<double>(rows - 1) * spacing_y : 0.0;
  }
};

inline HeightMap make_heightmap(std::vector<double> grid, std::size_t rows,
                                std::size_t cols, double spacing_x,
                                double spacing_y, EvaluationBand band = {}) {
  if (cols < 3 || rows < 1)
    throw validation_error("types: a height map needs at least 3 columns and 1 row");
  if (grid.size() != rows * cols)
    throw validation_error("types: height map grid size does not match rows*cols");
  if (!(spacing_x > 0.0) || !(spacing_y > 0.0))
    throw validation_error("types: height map spacings must be positive");
  HeightMap m;
  m.grid = std::move(grid);
  m.rows = rows;
  m.cols = cols;
  m.spacing_x = spacing_x;
  m.spacing_y = spacing_y;
  if (band.ls == 0.0 && band.lc == 0.0)
    band = EvaluationBand{2.0 * std::max(spacing_x, spacing_y),
                          static_cast<double>(cols - 1) * spacing_x};
  validate_band(band);
  m.band = band;
  return m;
}

}  // namespace surfphase
