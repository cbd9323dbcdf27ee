#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pinls::detail {

using cplx = std::complex<double>;

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place radix-2 Cooley-Tukey. Length must be a power of two.
inline void fft_inplace(std::vector<cplx>& a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: length must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * pi / double(len) * (inverse ? 1.0 : -1.0);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / double(n);
    for (auto& x : a) x *= inv;
  }
}

// Linear convolution of two sequences, zero-padded to kill wrap-around.
inline std::vector<cplx> fft_convolve(const std::vector<cplx>& f, const std::vector<cplx>& g) {
  const std::size_t m = f.size() + g.size() - 1;
  const std::size_t p = next_pow2(m);
  std::vector<cplx> a(p, cplx(0.0)), b(p, cplx(0.0));
  std::copy(f.begin(), f.end(), a.begin());
  std::copy(g.begin(), g.end(), b.begin());
  fft_inplace(a);
  fft_inplace(b);
  for (std::size_t i = 0; i < p; ++i) a[i] *= b[i];
  fft_inplace(a, true);
  a.resize(m);
  return a;
}

}  // namespace pinls::detail
