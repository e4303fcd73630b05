#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cmdi/graph.hpp"

namespace cmdi {

struct HimConfig {
  double xi = 1.0;
  double gamma = 0.0;  // <= 0 means AUTO: solve IM(empty_n, complete_n) = 1
};

namespace detail {

// Laplacian mode frequencies omega_k = sqrt(lambda_k) of the binarized graph,
// smallest eigenvalue (always 0 for a valid Laplacian) excluded.
inline std::vector<double> laplacian_frequencies(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.v) -= 1.0;
    lap(e.v, e.u) -= 1.0;
    lap(e.u, e.u) += 1.0;
    lap(e.v, e.v) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ipsen_mikhailov: eigen decomposition failed");
  std::vector<double> omega;
  omega.reserve(n - 1);
  for (int k = 1; k < n; ++k) omega.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[k])));
  return omega;
}

// Lorentzian spectral density rho(w) = K sum_k gamma / ((w - w_k)^2 + gamma^2),
// normalized so the integral over [0, inf) is 1.
struct SpectralDensity {
  std::vector<double> omega;
  double gamma;
  double norm;

  SpectralDensity(std::vector<double> w, double g) : omega(std::move(w)), gamma(g) {
    double s = 0.0;
    for (double wk : omega) s += M_PI / 2.0 + std::atan(wk / gamma);
    norm = s > 0.0 ? 1.0 / s : 0.0;
  }

  double operator()(double w) const {
    double s = 0.0;
    for (double wk : omega) s += gamma / ((w - wk) * (w - wk) + gamma * gamma);
    return norm * s;
  }
};

// Adaptive Simpson quadrature.
template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 40);
}

inline double im_from_frequencies(const std::vector<double>& w1, const std::vector<double>& w2,
                                  double gamma) {
  SpectralDensity rho1(w1, gamma), rho2(w2, gamma);
  double top = 0.0;
  for (double w : w1) top = std::max(top, w);
  for (double w : w2) top = std::max(top, w);
  top += 10.0 * gamma;
  auto diff2 = [&](double w) {
    double d = rho1(w) - rho2(w);
    return d * d;
  };
  return std::sqrt(std::max(0.0, integrate(diff2, 0.0, top, 1e-8)));
}

// gamma solving IM(empty_n, complete_n) = 1, by bisection.
inline double auto_gamma(int n) {
  std::vector<double> empty(n - 1, 0.0);
  std::vector<double> complete(n - 1, std::sqrt(static_cast<double>(n)));
  double lo = 1e-6, hi = 10.0;
  // IM decreases as gamma grows (densities flatten toward each other)
  for (int it = 0; it < 100 && hi - lo > 1e-9; ++it) {
    double mid = 0.5 * (lo + hi);
    if (im_from_frequencies(empty, complete, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline Graph binarize(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1.0});
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace detail

// Normalized Hamming distance over binarized adjacencies.
inline double hamming_distance(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() != g2.num_vertices())
    throw std::invalid_argument("hamming_distance: vertex counts differ");
  const int n = g1.num_vertices();
  if (n < 2) return 0.0;
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false)), b = a;
  for (const Edge& e : g1.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  for (const Edge& e : g2.edges()) b[e.u][e.v] = b[e.v][e.u] = true;
  double diff = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] != b[i][j]) diff += 1.0;
  return diff / (static_cast<double>(n) * (n - 1));
}

inline double resolve_gamma(const HimConfig& cfg, int n) {
  return cfg.gamma > 0.0 ? cfg.gamma : detail::auto_gamma(n);
}

// Ipsen-Mikhailov spectral distance over binarized Laplacians.
inline double ipsen_mikhailov(const Graph& g1, const Graph& g2, const HimConfig& cfg = {}) {
  if (g1.num_vertices() != g2.num_vertices())
    throw std::invalid_argument("ipsen_mikhailov: vertex counts differ");
  double gamma = resolve_gamma(cfg, g1.num_vertices());
  auto w1 = detail::laplacian_frequencies(detail::binarize(g1));
  auto w2 = detail::laplacian_frequencies(detail::binarize(g2));
  return detail::im_from_frequencies(w1, w2, gamma);
}

// HIM_xi = (1/sqrt(1+xi)) sqrt(H^2 + xi IM^2); HIM_0 is exactly Hamming.
inline double him_distance(const Graph& g1, const Graph& g2, const HimConfig& cfg = {}) {
  if (cfg.xi < 0.0) throw std::invalid_argument("him_distance: xi must be >= 0");
  double h = hamming_distance(g1, g2);
  if (cfg.xi == 0.0) return h;
  double im = ipsen_mikhailov(g1, g2, cfg);
  return std::sqrt((h * h + cfg.xi * im * im) / (1.0 + cfg.xi));
}

}  // namespace cmdi
