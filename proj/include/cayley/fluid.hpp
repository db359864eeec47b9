#pragma once

#include <array>
#include <cstddef>

namespace cayley::fluid {

using Vector3 = std::array<double, 3>;
using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Proportions (u, a, b) of undetermined, active and blocked vertices at time t.
struct FluidPoint {
  double t = 0.0;
  double u = 1.0;
  double a = 0.0;
  double b = 0.0;
};

Matrix3 identity();
Matrix3 operator*(const Matrix3& x, const Matrix3& y);
Matrix3 operator+(const Matrix3& x, const Matrix3& y);
Matrix3 operator*(double s, const Matrix3& x);
Matrix3 transpose(const Matrix3& x);
double max_abs_difference(const Matrix3& x, const Matrix3& y);

/// F(x, y, z) = (-2x - y - z, x + z, x + y).
Vector3 drift(double x, double y, double z);

/// Jacobian of the drift, the generator of the linearized flow.
Matrix3 jacobian();

/// u(t) = 2e^-t - 1, a(t) = b(t) = 1 - e^-t.
FluidPoint ode_solution(double t);

/// First zero of u, ln 2.
double t_star();

/// exp(s J) by scaling and squaring of a Taylor polynomial.
Matrix3 phi(double s);

/// Diffusion matrix of the chain along the fluid path; requires 0 <= s <= t*.
Matrix3 g_matrix(double s);

/// G(s) minus F F^T at the fluid point: the covariance of one chain step
/// rather than its second moment.
Matrix3 centered_g_matrix(double s);

struct QuadratureResult {
  Matrix3 value{};
  std::size_t intervals = 0;
  double last_change = 0.0;
};

/// Integral over [0, t*] of Phi(t*-s) G(s) Phi(t*-s)^T with composite
/// Gauss-Legendre, halving the panels until the entrywise change is below
/// `tolerance`.  Throws std::runtime_error if that never happens.
QuadratureResult covariance_quadrature(double tolerance = 1e-10, std::size_t max_intervals = 1 << 14);

QuadratureResult centered_covariance_quadrature(double tolerance = 1e-10, std::size_t max_intervals = 1 << 14);

/// Covariance matrix of the limiting fluctuations (Y1, Y2, Y3), built from G(s).
Matrix3 covariance_m();

/// The same integral with centered_g_matrix.  Its (0,0) entry, 3/4 - ln 2,
/// is the variance the simulated chain shows for theta.
Matrix3 centered_covariance_m();

struct CltConstants {
  double var_G = 0.0;      // Var(Y2 + Y1/2)
  double var_theta = 0.0;  // Var(Y1)
  double cov_AB = 0.0;     // Cov(Y2 + Y1/2, Y3 + Y1/2)
};

CltConstants clt_constants();
CltConstants clt_constants(const Matrix3& m);

}  // namespace cayley::fluid
