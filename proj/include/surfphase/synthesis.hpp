#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfphase/errors.hpp"
#include "surfphase/rng.hpp"
#include "surfphase/types.hpp"

namespace surfphase {

// Amplitude table A_k over integer wavenumbers k in [k_min, k_max], where k
// counts periods per record length. The inverse-transform generator for
// random rough profiles.
struct SpectralModel {
  std::vector<double> amplitudes;  // µm; index i holds A_{k_min + i}
  int k_min = 1;
  int k_max = 1;
  double record_length = 0.0;  // L, µm
  std::optional<double> hurst;
  int embedded_dim = 2;

  double amplitude(int k) const {
    if (k < k_min || k > k_max) return 0.0;
    return amplitudes[static_cast<std::size_t>(k - k_min)];
  }
  int mode_count() const { return k_max - k_min + 1; }
};

inline void validate_model(const SpectralModel& m) {
  if (m.k_min < 1 || m.k_max < m.k_min)
    throw validation_error("synthesis: need 1 <= k_min <= k_max");
  if (m.amplitudes.size() != static_cast<std::size_t>(m.mode_count()))
    throw validation_error("synthesis: amplitude table size does not match [k_min, k_max]");
  if (!(m.record_length > 0.0))
    throw validation_error("synthesis: record length must be positive");
  for (double a : m.amplitudes)
    if (!(a >= 0.0)) throw validation_error("synthesis: amplitudes must be >= 0");
}

// Fractal dimension from the Hurst exponent, D = E - H.
inline double hurst_to_dimension(double hurst, int embedded_dim) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw validation_error("synthesis: Hurst exponent must lie in (0, 1)");
  if (embedded_dim != 2 && embedded_dim != 3)
    throw validation_error("synthesis: embedded dimension must be 2 or 3");
  return static_cast<double>(embedded_dim) - hurst;
}

// Self-affine amplitude law A_k = scale * k^-(H + 1/2), giving a profile
// PSD proportional to k^-(1+2H).
inline SpectralModel powerlaw_model(int k_min, int k_max, double length,
                                    double hurst, double scale) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw validation_error("synthesis: Hurst exponent must lie in (0, 1)");
  if (!(scale >= 0.0))
    throw validation_error("synthesis: scale must be >= 0");
  SpectralModel m;
  m.k_min = k_min;
  m.k_max = k_max;
  m.record_length = length;
  m.hurst = hurst;
  const double exponent = hurst + 0.5;
  m.amplitudes.resize(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k)
    m.amplitudes[static_cast<std::size_t>(k - k_min)] =
        scale * std::pow(static_cast<double>(k), -exponent);
  validate_model(m);
  return m;
}

// Zero phase for mode k, uniform in [-pi, pi), derived from SplitMix64
// stream element k of `seed`. Fixed here so that golden files survive
// library upgrades.
inline double phase_for_mode(std::uint64_t seed, int k) {
  return -std::numbers::pi +
         2.0 * std::numbers::pi * uniform01_at(seed, static_cast<std::uint64_t>(k));
}

// Builds one realization of the ensemble:
//   z_i = sum_k A_k * cos(2*pi*k*i/N - theta(k)),      i = 0..N-1.
// Sample i maps to phase argument 2*pi*k*i/N, i.e. wavenumber k means
// exactly k periods per record; k_max is capped at floor((N-1)/2) by the
// precondition, so Parseval holds exactly: rms^2 = sum A_k^2 / 2.
inline Profile synthesize_profile(const SpectralModel& model, std::size_t n_points,
                                  std::uint64_t seed) {
  validate_model(model);
  if (n_points < 2 * static_cast<std::size_t>(model.k_max) + 1)
    throw validation_error("synthesis: n_points must be at least 2*k_max + 1");

  const std::size_t n = n_points;
  std::vector<double> z(n, 0.0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = model.k_min; k <= model.k_max; ++k) {
    const double a = model.amplitude(k);
    if (a == 0.0) continue;
    const double theta = phase_for_mode(seed, k);
    for (std::size_t i = 0; i < n; ++i) {
      // (k*i) mod n keeps the cos argument below 2*pi; exact in 64-bit
      const std::uint64_t m = (static_cast<std::uint64_t>(k) * i) % n;
      z[i] += a * std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n) - theta);
    }
  }

  const double spacing = model.record_length / static_cast<double>(n - 1);
  EvaluationBand band{model.record_length / static_cast<double>(model.k_max),
                      model.record_length / static_cast<double>(model.k_min)};
  return make_profile(std::move(z), spacing, band, "synth seed " + std::to_string(seed));
}

// The inverted pair: identical PSD, amplitudes of b negated,
//   a(x) = d*cos((k_min - 2) x) + sum_{k=k_min}^{k_max} (l/k) cos(k x),
//   b(x) = -a(x),
// with x = 2*pi*i/N and k_max = floor((N-1)/2). Zero phases throughout.
inline std::pair<Profile, Profile> fig6_pair(double d, int k_min,
                                             std::size_t n_points, double l = 1.0) {
  if (k_min < 3)
    throw validation_error("synthesis: the inverted pair needs k_min >= 3");
  if (n_points < 2 * static_cast<std::size_t>(k_min) + 1)
    throw validation_error("synthesis: n_points must be at least 2*k_min + 1");
  if (!(d >= 0.0) || !(l >= 0.0))
    throw validation_error("synthesis: amplitudes must be >= 0");

  const std::size_t n = n_points;
  const int k_max = static_cast<int>((n - 1) / 2);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> a(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t m0 =
        (static_cast<std::uint64_t>(k_min - 2) * i) % n;
    a[i] = d * std::cos(two_pi * static_cast<double>(m0) / static_cast<double>(n));
  }
  for (int k = k_min; k <= k_max; ++k) {
    const double amp = l / static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t m = (static_cast<std::uint64_t>(k) * i) % n;
      a[i] += amp * std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n));
    }
  }
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = -a[i];

  const double record = two_pi;  // the pair lives on x in [0, 2*pi]
  const double spacing = record / static_cast<double>(n - 1);
  EvaluationBand band{record / static_cast<double>(k_max),
                      record / static_cast<double>(k_min - 2)};
  return {make_profile(std::move(a), spacing, band, "pair a"),
          make_profile(std::move(b), spacing, band, "pair b")};
}

}  // namespace surfphase
