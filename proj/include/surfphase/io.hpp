#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfphase/errors.hpp"
#include "surfphase/format.hpp"
#include "surfphase/types.hpp"

namespace surfphase {

enum class ProfileFormat { auto_detect, two_column_text, csv };

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_fields(const std::string& line, bool allow_comma) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    const bool sep = std::isspace(static_cast<unsigned char>(c)) || (allow_comma && c == ',');
    if (sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline double parse_number(const std::string& tok, const std::string& path, std::size_t lineno) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw io_error("io: " + path + ":" + std::to_string(lineno) +
                   ": non-numeric cell '" + tok + "'");
  return v;
}

// Header lines start with '#'. A "units:" header must say um; key=value
// pairs (dx=..., dy=...) are collected for height maps.
struct HeaderInfo {
  std::optional<double> dx, dy;
  std::string label;
};

inline void parse_header_line(const std::string& line, HeaderInfo& info,
                              const std::string& path) {
  std::string body = trim(line.substr(1));
  const auto colon = body.find(':');
  if (colon != std::string::npos) {
    const std::string key = trim(body.substr(0, colon));
    const std::string value = trim(body.substr(colon + 1));
    if (key == "units") {
      if (value != "um")
        throw io_error("io: " + path + ": unsupported units '" + value + "' (expected um)");
      return;
    }
    if (key == "label") {
      info.label = value;
      return;
    }
  }
  // comma/space separated key=value pairs
  for (const auto& tok : split_fields(body, true)) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(tok.substr(0, eq));
    const std::string value = trim(tok.substr(eq + 1));
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str()) continue;
    if (key == "dx") info.dx = v;
    if (key == "dy") info.dy = v;
  }
}

}  // namespace detail

// Reads a two-column (x, z) profile file. Columns may be separated by
// whitespace or commas; '#' lines are headers. Abscissae must be uniformly
// spaced within 1e-6 relative.
inline Profile load_profile(const std::string& path,
                            ProfileFormat format = ProfileFormat::auto_detect) {
  std::ifstream in(path);
  if (!in) throw io_error("io: cannot open '" + path + "'");

  const bool allow_comma = format != ProfileFormat::two_column_text;
  detail::HeaderInfo header;
  std::vector<double> xs, zs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      detail::parse_header_line(t, header, path);
      continue;
    }
    const auto fields = detail::split_fields(t, allow_comma);
    if (fields.size() != 2)
      throw io_error("io: " + path + ":" + std::to_string(lineno) +
                     ": expected two columns, got " + std::to_string(fields.size()));
    const double x = detail::parse_number(fields[0], path, lineno);
    const double z = detail::parse_number(fields[1], path, lineno);
    if (!std::isfinite(x) || !std::isfinite(z))
      throw io_error("io: " + path + ":" + std::to_string(lineno) + ": non-finite cell");
    xs.push_back(x);
    zs.push_back(z);
  }
  if (xs.size() < 3)
    throw io_error("io: " + path + ": fewer than 3 data rows");

  const double spacing = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(spacing > 0.0))
    throw io_error("io: " + path + ": abscissae are not increasing");
  double max_dev = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double dev = std::abs((xs[i] - xs[i - 1]) - spacing);
    max_dev = std::max(max_dev, dev);
  }
  if (max_dev > 1e-6 * spacing)
    throw io_error("io: " + path + ": non-uniform spacing (max deviation " +
                   format_number(max_dev) + " um against step " +
                   format_number(spacing) + " um)");

  std::string label = header.label.empty() ? path : header.label;
  return make_profile(std::move(zs), spacing, {}, std::move(label));
}

inline void save_profile(const std::string& path, const Profile& p) {
  std::ofstream out(path);
  if (!out) throw io_error("io: cannot write '" + path + "'");
  out << "# units: um\n";
  if (!p.label.empty()) out << "# label: " << p.label << "\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << format_number(static_cast<double>(i) * p.spacing) << ' '
        << format_number(p.ordinates[i]) << '\n';
  }
  if (!out) throw io_error("io: failed writing '" + path + "'");
}

// Reads a rectangular CSV grid. Spacings come from the arguments; pass 0 to
// take them from a "# dx=..., dy=..." header line.
inline HeightMap load_heightmap(const std::string& path, double spacing_x = 0.0,
                                double spacing_y = 0.0) {
  std::ifstream in(path);
  if (!in) throw io_error("io: cannot open '" + path + "'");

  detail::HeaderInfo header;
  std::vector<double> grid;
  std::size_t cols = 0, rows = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      detail::parse_header_line(t, header, path);
      continue;
    }
    const auto fields = detail::split_fields(t, true);
    if (cols == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw io_error("io: " + path + ":" + std::to_string(lineno) +
                     ": ragged grid (row has " + std::to_string(fields.size()) +
                     " cells, expected " + std::to_string(cols) + ")");
    }
    for (const auto& f : fields) {
      const double v = detail::parse_number(f, path, lineno);
      if (!std::isfinite(v))
        throw io_error("io: " + path + ":" + std::to_string(lineno) +
                       ": non-finite cell");
      grid.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw io_error("io: " + path + ": empty grid");

  if (spacing_x <= 0.0 && header.dx) spacing_x = *header.dx;
  if (spacing_y <= 0.0 && header.dy) spacing_y = *header.dy;
  if (spacing_x <= 0.0 || spacing_y <= 0.0)
    throw io_error("io: " + path +
                   ": grid spacing not given (pass it explicitly or add a '# dx=..., dy=...' header)");

  return make_heightmap(std::move(grid), rows, cols, spacing_x, spacing_y);
}

inline void save_heightmap(const std::string& path, const HeightMap& m) {
  std::ofstream out(path);
  if (!out) throw io_error("io: cannot write '" + path + "'");
  out << "# units: um\n";
  out << "# dx=" << format_number(m.spacing_x) << ", dy=" << format_number(m.spacing_y) << "\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out << ',';
      out << format_number(m.at(r, c));
    }
    out << '\n';
  }
  if (!out) throw io_error("io: failed writing '" + path + "'");
}

}  // namespace surfphase
