#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pinls/fft.hpp"

namespace pinls {

using cplx = std::complex<double>;

// Uniform 1D grid, nodes x_i = x_min + i h, h = (x_max - x_min)/(n-1).
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;

  Grid() = default;
  Grid(double a, double b, int count) : x_min(a), x_max(b), n(count) {
    if (!(x_min < x_max) || n < 2) throw std::invalid_argument("Grid: need x_min < x_max, n >= 2");
  }

  double h() const { return (x_max - x_min) / double(n - 1); }
  double x(int i) const { return x_min + i * h(); }

  bool symmetric() const {
    return std::abs(x_min + x_max) < 1.0e-12 * (x_max - x_min) && (n % 2 == 1);
  }
  int center_index() const { return (n - 1) / 2; }

  // index of a node that coincides with x0, or -1
  int index_of(double x0) const {
    const double fi = (x0 - x_min) / h();
    const int i = int(std::lround(fi));
    if (i < 0 || i >= n) return -1;
    return std::abs(fi - i) < 1.0e-9 ? i : -1;
  }

  bool same_spacing(const Grid& o) const {
    return std::abs(h() - o.h()) < 1.0e-12 * std::max(h(), o.h());
  }
  bool operator==(const Grid& o) const {
    return n == o.n && std::abs(x_min - o.x_min) < 1e-12 && std::abs(x_max - o.x_max) < 1e-12;
  }
};

// Complex samples on a Grid. Shared-node convention: characteristic
// functions take the midpoint of their one-sided limits at a node that
// sits exactly on the cut, so partitions of unity stay exact on the grid
// and trapezoid sums keep second order across the cut.
struct GridFunction {
  Grid grid;
  std::vector<cplx> v;

  GridFunction() = default;
  explicit GridFunction(const Grid& g) : grid(g), v(g.n, cplx(0.0)) {}
  GridFunction(const Grid& g, std::vector<cplx> vals) : grid(g), v(std::move(vals)) {
    if (int(v.size()) != g.n) throw std::invalid_argument("GridFunction: size mismatch");
  }

  static GridFunction sample(const Grid& g, const std::function<cplx(double)>& f) {
    GridFunction out(g);
    for (int i = 0; i < g.n; ++i) out.v[i] = f(g.x(i));
    return out;
  }

  // characteristic function of [0, inf); value 1/2 at x = 0
  static GridFunction chi_plus(const Grid& g) {
    GridFunction out(g);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      out.v[i] = std::abs(x) < 1.0e-9 ? 0.5 : (x > 0.0 ? 1.0 : 0.0);
    }
    return out;
  }
  static GridFunction chi_minus(const Grid& g) {
    GridFunction out(g);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      out.v[i] = std::abs(x) < 1.0e-9 ? 0.5 : (x < 0.0 ? 1.0 : 0.0);
    }
    return out;
  }
  // indicator of [a,b], 1/2 at nodes matching the endpoints
  static GridFunction indicator(const Grid& g, double a, double b) {
    GridFunction out(g);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      if (std::abs(x - a) < 1.0e-9 || std::abs(x - b) < 1.0e-9)
        out.v[i] = 0.5;
      else
        out.v[i] = (x > a && x < b) ? 1.0 : 0.0;
    }
    return out;
  }

  double h() const { return grid.h(); }
  int size() const { return grid.n; }

  GridFunction& operator+=(const GridFunction& o) {
    for (int i = 0; i < size(); ++i) v[i] += o.v[i];
    return *this;
  }
  GridFunction& operator-=(const GridFunction& o) {
    for (int i = 0; i < size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  GridFunction& operator*=(cplx c) {
    for (auto& z : v) z *= c;
    return *this;
  }
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(cplx c, GridFunction a) { return a *= c; }

  GridFunction pointwise(const GridFunction& o) const {
    GridFunction out(grid);
    for (int i = 0; i < size(); ++i) out.v[i] = v[i] * o.v[i];
    return out;
  }
  GridFunction conjugate() const {
    GridFunction out(grid);
    for (int i = 0; i < size(); ++i) out.v[i] = std::conj(v[i]);
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  // plain h*sum grid L2 norm (matches the exact step-profile Lorentz (2,2) norm)
  double norm_l2() const {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(h() * s);
  }
  bool finite() const {
    for (const auto& z : v)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
};

// composite trapezoid for int f dx over the grid span
inline cplx integrate(const GridFunction& f) {
  const int n = f.size();
  cplx s = 0.5 * (f.v[0] + f.v[n - 1]);
  for (int i = 1; i < n - 1; ++i) s += f.v[i];
  return s * f.h();
}

// trapezoid inner product <f,g> = int f conj(g) dx
inline cplx inner(const GridFunction& f, const GridFunction& g) {
  const int n = f.size();
  cplx s = 0.5 * (f.v[0] * std::conj(g.v[0]) + f.v[n - 1] * std::conj(g.v[n - 1]));
  for (int i = 1; i < n - 1; ++i) s += f.v[i] * std::conj(g.v[i]);
  return s * f.h();
}

// Linear convolution scaled by h, restricted back to f's grid. Grids must
// share the spacing and be offset-commensurate.
inline GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  if (!f.grid.same_spacing(g.grid)) throw std::invalid_argument("convolve: incompatible grids");
  const double h = f.h();
  const double off = g.grid.x_min / h;
  const long s = std::lround(off);
  if (std::abs(off - double(s)) > 1.0e-6)
    throw std::invalid_argument("convolve: incompatible grids");

  auto full = pinls::detail::fft_convolve(f.v, g.v);
  GridFunction out(f.grid);
  const long m = long(full.size());
  for (int j = 0; j < f.size(); ++j) {
    const long k = long(j) - s;
    out.v[j] = (k >= 0 && k < m) ? h * full[k] : cplx(0.0);
  }
  return out;
}

inline GridFunction reflect(const GridFunction& f) {
  if (!f.grid.symmetric()) throw std::invalid_argument("reflect: grid not symmetric about 0");
  GridFunction out(f.grid);
  const int n = f.size();
  for (int i = 0; i < n; ++i) out.v[i] = f.v[n - 1 - i];
  return out;
}

// f = phi_minus + reflect(phi_plus), both halves supported on x <= 0;
// the x = 0 node carries half of f(0) in each part.
inline std::pair<GridFunction, GridFunction> halfline_split(const GridFunction& f) {
  if (!f.grid.symmetric())
    throw std::invalid_argument("halfline_split: grid not symmetric about 0");
  const GridFunction chim = GridFunction::chi_minus(f.grid);
  return {f.pointwise(chim), reflect(f).pointwise(chim)};
}

}  // namespace pinls
