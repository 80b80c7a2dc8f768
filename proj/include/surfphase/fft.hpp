#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "surfphase/errors.hpp"

namespace surfphase {
namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative Cooley-Tukey, power-of-two length, fixed evaluation order.
// Twiddles come from one table of e^{-2*pi*i*j/n} evaluated directly with
// cos/sin; no recurrence, so rounding does not accumulate across stages.
inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(ang), std::sin(ang)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> w = twiddle[j * stride];
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

// Bluestein's chirp-z algorithm: DFT of arbitrary length via one
// power-of-two convolution. j^2 is reduced mod 2n before the trig call to
// keep arguments small (j^2 fits in 64 bits for any realistic n).
inline std::vector<std::complex<double>> fft_bluestein(
    const std::vector<std::complex<double>>& x, bool inverse) {
  const std::size_t n = x.size();
  const double sign = inverse ? 1.0 : -1.0;

  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t j2 = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(j2) / static_cast<double>(n);
    chirp[j] = {std::cos(ang), std::sin(ang)};
  }

  const std::size_t m = next_power_of_two(2 * n - 1);
  std::vector<std::complex<double>> a(m), b(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) {
    b[j] = std::conj(chirp[j]);
    b[m - j] = b[j];
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, true);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= inv;
  }
  return out;
}

}  // namespace detail

// Forward DFT, X[k] = sum_j x[j] e^{-2*pi*i*k*j/N}. Any length >= 1.
inline std::vector<std::complex<double>> dft(std::vector<std::complex<double>> x) {
  if (x.empty()) throw validation_error("fft: empty input");
  if (detail::is_power_of_two(x.size())) {
    detail::fft_pow2(x, false);
    return x;
  }
  return detail::fft_bluestein(x, false);
}

// Inverse DFT including the 1/N factor.
inline std::vector<std::complex<double>> idft(std::vector<std::complex<double>> x) {
  if (x.empty()) throw validation_error("fft: empty input");
  if (detail::is_power_of_two(x.size())) {
    detail::fft_pow2(x, true);
    return x;
  }
  return detail::fft_bluestein(x, true);
}

// DFT of a real sequence.
inline std::vector<std::complex<double>> dft_real(const std::vector<double>& x) {
  std::vector<std::complex<double>> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
  return dft(std::move(cx));
}

// Real part of the inverse DFT; used after editing a conjugate-symmetric
// spectrum, where the imaginary residue is rounding noise.
inline std::vector<double> idft_real(std::vector<std::complex<double>> spectrum) {
  auto back = idft(std::move(spectrum));
  std::vector<double> out(back.size());
  for (std::size_t i = 0; i < back.size(); ++i) out[i] = back[i].real();
  return out;
}

}  // namespace surfphase
