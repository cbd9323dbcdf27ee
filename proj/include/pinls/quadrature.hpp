#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pinls::quad {

using cplx = std::complex<double>;

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

namespace detail {

// Implicit QL with shifts for a symmetric tridiagonal matrix, tracking the
// first row of the eigenvector matrix (Golub-Welsch companion).
// d: diagonal, e: subdiagonal (e[0..n-2]), z: starts as e_1.
inline void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = int(d.size());
  if (n == 1) return;
  const double eps = 2.220446049250313e-16;
  e.resize(n, 0.0);
  const int max_iter = 60;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
      }
      if (m == l) break;
      if (++iter > max_iter) throw std::runtime_error("imtqlx: no convergence");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  // sort ascending, permuting z along
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(z[i], z[k]);
    }
  }
}

// Nodes/weights from monic three-term recurrence: p_{k+1} = (x-a_k)p_k - b_k p_{k-1},
// with b[0] = integral of the weight.
inline Rule golub_welsch(std::vector<double> a, std::vector<double> b) {
  const int n = int(a.size());
  std::vector<double> e(n, 0.0), z(n, 0.0);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(b[k]);
  z[0] = 1.0;
  const double mu0 = b[0];
  imtqlx(a, e, z);
  Rule r;
  r.x = std::move(a);
  r.w.resize(n);
  for (int k = 0; k < n; ++k) r.w[k] = mu0 * z[k] * z[k];
  return r;
}

}  // namespace detail

// Gauss-Legendre on [-1,1].
inline Rule gauss_legendre(int n) {
  std::vector<double> a(n, 0.0), b(n, 0.0);
  b[0] = 2.0;
  for (int k = 1; k < n; ++k) {
    const double kk = double(k);
    b[k] = kk * kk / ((2.0 * kk - 1.0) * (2.0 * kk + 1.0));
  }
  return detail::golub_welsch(std::move(a), std::move(b));
}

inline const Rule& gauss_legendre_cached(int n) {
  static std::vector<Rule> cache(129);
  if (n < 1 || n > 128) throw std::invalid_argument("gauss_legendre_cached: order out of range");
  if (cache[n].x.empty()) cache[n] = gauss_legendre(n);
  return cache[n];
}

// Gauss-Laguerre, weight e^{-x} on [0, inf). Weights include the e^{-x} factor.
inline Rule gauss_laguerre(int n) {
  std::vector<double> a(n), b(n);
  b[0] = 1.0;
  for (int k = 0; k < n; ++k) a[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) b[k] = double(k) * double(k);
  return detail::golub_welsch(std::move(a), std::move(b));
}

inline const Rule& gauss_laguerre_cached(int order) {
  static std::vector<std::pair<int, Rule>> cache;
  for (auto& [n, r] : cache)
    if (n == order) return r;
  cache.emplace_back(order, gauss_laguerre(order));
  return cache.back().second;
}

// Gauss-Jacobi, weight (1-x)^alpha (1+x)^beta on [-1,1]; alpha,beta > -1.
inline Rule gauss_jacobi(int n, double alpha, double beta) {
  const double ab = alpha + beta;
  std::vector<double> a(n), b(n);
  b[0] = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                  std::lgamma(ab + 2.0));
  a[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double kk = double(k);
    const double den = (2.0 * kk + ab) * (2.0 * kk + ab + 2.0);
    a[k] = (beta * beta - alpha * alpha) / den;
    b[k] = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
           ((2.0 * kk + ab) * (2.0 * kk + ab) * (2.0 * kk + ab + 1.0) * (2.0 * kk + ab - 1.0));
  }
  return detail::golub_welsch(std::move(a), std::move(b));
}

// Gauss-Jacobi mapped to [0,1] with weight (1-s)^alpha s^beta.
inline Rule gauss_jacobi01(int n, double alpha, double beta) {
  Rule r = gauss_jacobi(n, alpha, beta);
  const double scale = std::pow(2.0, -(alpha + beta + 1.0));
  for (int k = 0; k < n; ++k) {
    r.x[k] = 0.5 * (1.0 + r.x[k]);
    r.w[k] *= scale;
  }
  return r;
}

// Fresnel integrals, convention C(x) + i S(x) = int_0^x exp(i pi u^2 / 2) du.
// Power series for small |x|, modified Lentz continued fraction otherwise.
inline void fresnel(double x, double& c_out, double& s_out) {
  const double pi = 3.14159265358979323846;
  const double eps = 6.0e-16;
  const double fpmin = 1.0e-300;
  const int maxit = 200;
  const double ax = std::abs(x);

  double cc, ss;
  if (ax < 1.0e-150) {
    cc = ax;
    ss = 0.0;
  } else if (ax <= 1.4) {
    double sum = 0.0, sums = 0.0, sumc = ax;
    double sign = 1.0, fact = 0.5 * pi * ax * ax, term = ax;
    bool odd = true;
    int n = 3;
    for (int k = 1; k <= maxit; ++k) {
      term *= fact / k;
      sum += sign * term / n;
      double test = std::abs(sum) * eps;
      if (odd) {
        sign = -sign;
        sums = sum;
        sum = sumc;
      } else {
        sumc = sum;
        sum = sums;
      }
      if (term < test) break;
      odd = !odd;
      n += 2;
    }
    ss = sums;
    cc = sumc;
  } else {
    const double pix2 = pi * ax * ax;
    cplx b(1.0, -pix2);
    cplx cfc(1.0 / fpmin, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    int n = -1;
    for (int k = 2; k <= maxit; ++k) {
      n += 2;
      const double a = -double(n) * double(n + 1);
      b += 4.0;
      d = 1.0 / (a * d + b);
      cfc = b + a / cfc;
      const cplx del = cfc * d;
      h *= del;
      if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) break;
    }
    h *= cplx(ax, -ax);
    const cplx phase(std::cos(0.5 * pix2), std::sin(0.5 * pix2));
    const cplx cs = cplx(0.5, 0.5) * (1.0 - phase * h);
    cc = cs.real();
    ss = cs.imag();
  }
  if (x < 0.0) {
    cc = -cc;
    ss = -ss;
  }
  c_out = cc;
  s_out = ss;
}

// int_p^q exp(i(-t xi^2 + c xi)) dxi for real t != 0, via Fresnel integrals.
inline cplx quadratic_phase_moment0(double p, double q, double t, double c) {
  const double pi = 3.14159265358979323846;
  const double at = std::abs(t);
  const double xi0 = c / (2.0 * t);
  const double scale = std::sqrt(2.0 * at / pi);
  double cp, sp, cq, sq;
  fresnel(scale * (p - xi0), cp, sp);
  fresnel(scale * (q - xi0), cq, sq);
  const cplx phase(std::cos(c * c / (4.0 * t)), std::sin(c * c / (4.0 * t)));
  cplx f;
  if (t > 0.0)
    f = cplx(cq - cp, -(sq - sp));
  else
    f = cplx(cq - cp, (sq - sp));
  return phase * std::sqrt(pi / (2.0 * at)) * f;
}

// J(a, q, t) = int_0^inf exp(-a u) exp(i (u+q)^2 / (4t)) du, a > 0, t != 0.
//
// For q >= 0 the contour is rotated onto u = e^{i pi/4} s (t>0), where the
// quadratic phase becomes Gaussian decay and the oscillation rate never
// exceeds the decay rate; Gauss-Laguerre on the scaled ray then converges at
// moderate order, which a doubling check confirms.
namespace detail {

inline cplx rotated_halfline(double a, double q, double t) {
  // assumes q >= 0, t > 0 here; the public wrapper reduces to this case
  const double kplus = (a + q / (2.0 * t)) / std::sqrt(2.0);
  const double kminus = (q / (2.0 * t) - a) / std::sqrt(2.0);
  const double keff = kplus + 1.0 / (2.0 * std::sqrt(t));
  const cplx rot(std::cos(0.25 * 3.14159265358979323846),
                 std::sin(0.25 * 3.14159265358979323846));
  const cplx front = rot * cplx(std::cos(q * q / (4.0 * t)), std::sin(q * q / (4.0 * t))) / keff;

  cplx prev(0.0, 0.0);
  for (int order = 64; order <= 512; order *= 2) {
    const Rule& r = gauss_laguerre_cached(order);
    cplx sum(0.0, 0.0);
    for (int k = 0; k < order; ++k) {
      const double s = r.x[k] / keff;
      const double re = r.x[k] * (1.0 - kplus / keff) - s * s / (4.0 * t);
      const double im = kminus * s;
      sum += r.w[k] * std::exp(re) * cplx(std::cos(im), std::sin(im));
    }
    sum *= front;
    if (order > 64 && std::abs(sum - prev) < 1.0e-9 * (1.0 + std::abs(sum))) return sum;
    prev = sum;
  }
  return prev;
}

}  // namespace detail

inline cplx halfline_gauss_phase(double a, double q, double t) {
  if (a <= 0.0) throw std::invalid_argument("halfline_gauss_phase: need a > 0");
  if (t == 0.0) throw std::invalid_argument("halfline_gauss_phase: need t != 0");
  if (t < 0.0) return std::conj(halfline_gauss_phase(a, q, -t));
  if (q >= 0.0) return detail::rotated_halfline(a, q, t);
  // q < 0: shift w = u + q, split at the stationary point w = 0:
  //   J = e^{a q} [ int_0^inf e^{-a w} e^{i w^2/4t} dw + int_0^{|q|} e^{a v} e^{i v^2/4t} dv ]
  const double r = -q;
  const cplx A = detail::rotated_halfline(a, 0.0, t);
  // finite part, integrated with the growth factored out for stability
  cplx C(0.0, 0.0);  // holds e^{-a r} * int_0^r e^{a v} e^{i v^2/4t} dv
  const int nstrip = std::max(16, int(std::ceil(r / std::min(0.25, 4.0 * t / (r + 1.0)))));
  const double hs = r / nstrip;
  for (int j = 0; j < nstrip; ++j) {
    const double v0 = j * hs, v1 = v0 + hs;
    const double phase_span = (v1 * v1 - v0 * v0) / (4.0 * t);
    const int ngl = std::min(32, std::max(8, int(std::ceil(phase_span)) + 6));
    const Rule& g = gauss_legendre_cached(ngl);
    cplx strip(0.0, 0.0);
    for (int k = 0; k < ngl; ++k) {
      const double v = 0.5 * (v0 + v1) + 0.5 * hs * g.x[k];
      strip += 0.5 * hs * g.w[k] * std::exp(a * (v - v1)) *
               cplx(std::cos(v * v / (4.0 * t)), std::sin(v * v / (4.0 * t)));
    }
    C = C * std::exp(-a * hs) + strip;  // scaled recurrence, ends at e^{-a r} C(r)
  }
  return std::exp(a * q) * A + C;
}

// Table of J(a, sign*c_k, t) for c_k = k*h, k = 0..nc-1. For sign < 0 the
// finite split integrals share their prefix, so the whole table costs a
// single sweep in c.
inline std::vector<cplx> halfline_gauss_phase_table(double a, double h, int nc, double t,
                                                    int sign) {
  if (t < 0.0) {
    auto tab = halfline_gauss_phase_table(a, h, nc, -t, sign);
    for (auto& v : tab) v = std::conj(v);
    return tab;
  }
  std::vector<cplx> tab(nc);
  if (sign >= 0) {
    for (int k = 0; k < nc; ++k) tab[k] = detail::rotated_halfline(a, k * h, t);
    return tab;
  }
  const cplx A = detail::rotated_halfline(a, 0.0, t);
  cplx D(0.0, 0.0);  // e^{-a c_k} int_0^{c_k} e^{a v} e^{i v^2/4t} dv
  tab[0] = A;
  const double eah = std::exp(-a * h);
  for (int k = 1; k < nc; ++k) {
    const double v0 = (k - 1) * h, v1 = k * h;
    const double phase_span = (v1 * v1 - v0 * v0) / (4.0 * t);
    const int nsub = std::max(1, int(std::ceil(phase_span / 12.0)));
    const double hs = h / nsub;
    cplx strip(0.0, 0.0);  // int_{v0}^{v1} e^{a(v - v1)} e^{i v^2/4t} dv
    for (int j = 0; j < nsub; ++j) {
      const double s0 = v0 + j * hs, s1 = s0 + hs;
      const double span = (s1 * s1 - s0 * s0) / (4.0 * t);
      const int ngl = std::min(24, std::max(8, int(std::ceil(span)) + 6));
      const Rule& g = gauss_legendre_cached(ngl);
      for (int m = 0; m < ngl; ++m) {
        const double v = 0.5 * (s0 + s1) + 0.5 * hs * g.x[m];
        strip += 0.5 * hs * g.w[m] * std::exp(a * (v - v1)) *
                 cplx(std::cos(v * v / (4.0 * t)), std::sin(v * v / (4.0 * t)));
      }
    }
    D = D * eah + strip;
    tab[k] = std::exp(-a * v1) * A + D;
  }
  return tab;
}

}  // namespace pinls::quad
