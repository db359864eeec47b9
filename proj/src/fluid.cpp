#include "cayley/fluid.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cayley::fluid {

Matrix3 identity() { return Matrix3{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
  Matrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

Matrix3 operator+(const Matrix3& x, const Matrix3& y) {
  Matrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = x[i][j] + y[i][j];
  return out;
}

Matrix3 operator*(double s, const Matrix3& x) {
  Matrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = s * x[i][j];
  return out;
}

Matrix3 transpose(const Matrix3& x) {
  Matrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = x[j][i];
  return out;
}

double max_abs_difference(const Matrix3& x, const Matrix3& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(x[i][j] - y[i][j]));
  return worst;
}

Vector3 drift(double x, double y, double z) { return {-2.0 * x - y - z, x + z, x + y}; }

Matrix3 jacobian() { return Matrix3{{{-2.0, -1.0, -1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}}}; }

FluidPoint ode_solution(double t) {
  if (t < 0.0) throw std::invalid_argument("ode_solution: t must be >= 0");
  const double decay = std::exp(-t);
  return FluidPoint{t, 2.0 * decay - 1.0, 1.0 - decay, 1.0 - decay};
}

double t_star() { return std::log(2.0); }

Matrix3 phi(double s) {
  const Matrix3 generator = jacobian();
  // ||s J||_1 = 4|s|; scale until the argument norm is at most 1/2.
  int squarings = 0;
  double scaled = s;
  while (std::abs(scaled) * 4.0 > 0.5) {
    scaled /= 2.0;
    ++squarings;
  }
  const Matrix3 a = scaled * generator;
  // Degree-18 Taylor polynomial; remainder below 1e-20 for ||a|| <= 1/2.
  Matrix3 result = identity();
  Matrix3 term = identity();
  for (int k = 1; k <= 18; ++k) {
    term = (1.0 / k) * (term * a);
    result = result + term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Matrix3 g_matrix(double s) {
  if (s < 0.0 || s > t_star() + 1e-12) throw std::invalid_argument("g_matrix: s outside [0, t*]");
  const FluidPoint p = ode_solution(s);
  const double u = p.u, a = p.a, b = p.b;
  return Matrix3{{{4.0 * u + a + b, -2.0 * u - b, -2.0 * u - a},
                  {-2.0 * u - b, u + b, u},
                  {-2.0 * u - a, u, u + a}}};
}

Matrix3 centered_g_matrix(double s) {
  Matrix3 g = g_matrix(s);
  const FluidPoint p = ode_solution(s);
  const Vector3 f = drift(p.u, p.a, p.b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g[i][j] -= f[i] * f[j];
  return g;
}

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on P_order.
GaussRule gauss_legendre(std::size_t order) {
  GaussRule rule{std::vector<double>(order), std::vector<double>(order)};
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < order; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      derivative = static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * derivative * derivative);
  }
  return rule;
}

using Diffusion = Matrix3 (*)(double);

Matrix3 integrand(Diffusion g, double s) {
  const Matrix3 flow = phi(t_star() - s);
  return flow * g(s) * transpose(flow);
}

Matrix3 composite(Diffusion g, const GaussRule& rule, double lo, double hi, std::size_t panels) {
  Matrix3 total{};
  const double width = (hi - lo) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      total = total + (rule.weights[i] * width / 2.0) * integrand(g, mid + rule.nodes[i] * width / 2.0);
    }
  }
  return total;
}

QuadratureResult quadrature(Diffusion g, double tolerance, std::size_t max_intervals) {
  static const GaussRule rule = gauss_legendre(10);
  const double upper = t_star();
  Matrix3 previous = composite(g, rule, 0.0, upper, 1);
  for (std::size_t panels = 2; panels <= max_intervals; panels *= 2) {
    const Matrix3 current = composite(g, rule, 0.0, upper, panels);
    const double change = max_abs_difference(current, previous);
    if (change < tolerance) return QuadratureResult{current, panels, change};
    previous = current;
  }
  throw std::runtime_error("covariance_quadrature did not converge");
}

}  // namespace

QuadratureResult covariance_quadrature(double tolerance, std::size_t max_intervals) {
  return quadrature(&g_matrix, tolerance, max_intervals);
}

QuadratureResult centered_covariance_quadrature(double tolerance, std::size_t max_intervals) {
  return quadrature(&centered_g_matrix, tolerance, max_intervals);
}

Matrix3 covariance_m() { return covariance_quadrature().value; }

Matrix3 centered_covariance_m() { return centered_covariance_quadrature().value; }

CltConstants clt_constants(const Matrix3& m) {
  return CltConstants{m[1][1] + m[0][1] + m[0][0] / 4.0, m[0][0],
                      m[1][2] + m[0][1] / 2.0 + m[0][2] / 2.0 + m[0][0] / 4.0};
}

CltConstants clt_constants() { return clt_constants(covariance_m()); }

}  // namespace cayley::fluid
