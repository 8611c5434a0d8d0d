#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "nlkg/errors.hpp"

namespace nlkg {

enum class Boundary { dirichlet_zero, periodic };

/// Uniform mesh on [-half_width, +half_width].
///
/// Node i sits at x_i = -half_width + i * spacing with
/// spacing = 2*half_width/(n_points-1), so both endpoints are nodes.
/// Under periodic boundary the wrap from the last node back to the first is
/// one further step of `spacing`, i.e. the period is n_points * spacing.
struct Grid1D {
  double half_width = 40.0;
  int n_points = 2048;
  Boundary boundary = Boundary::dirichlet_zero;

  static Grid1D make(double half_width, int n_points,
                     Boundary boundary = Boundary::dirichlet_zero);

  double spacing() const { return 2.0 * half_width / (n_points - 1); }
  double node(int i) const { return -half_width + i * spacing(); }
  Eigen::ArrayXd nodes() const;

  bool operator==(const Grid1D& o) const {
    return half_width == o.half_width && n_points == o.n_points &&
           boundary == o.boundary;
  }
};

/// A real scalar function sampled on a Grid1D.
struct ScalarField {
  Grid1D grid;
  Eigen::VectorXd values;

  ScalarField() = default;
  ScalarField(const Grid1D& g, Eigen::VectorXd v);

  double operator[](int i) const { return values[i]; }
  int size() const { return static_cast<int>(values.size()); }
};

/// Sample an analytic function on the grid.
ScalarField sample(const Grid1D& grid, const std::function<double(double)>& f);
ScalarField zero_field(const Grid1D& grid);

/// Vector state U = (u, u_t). Both components live on the same grid.
struct StateVector {
  ScalarField first;
  ScalarField second;

  StateVector() = default;
  StateVector(ScalarField u, ScalarField ut);

  const Grid1D& grid() const { return first.grid; }
};

StateVector zero_state(const Grid1D& grid);

// Arithmetic used all over the lab; fields are treated as immutable values.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(double s, const StateVector& a);

/// Trapezoidal quadrature of a*b over the domain. Symmetric, bilinear.
/// Periodic grids use the rectangle rule over one full period.
double inner_l2(const ScalarField& a, const ScalarField& b);

/// <U, V> = (u1, v1) + (u2, v2).
double inner_pair(const StateVector& U, const StateVector& V);

/// Cell-sum Dirichlet energy: sum over cells of (du/dx)^2 * dx, including the
/// two ghost cells under dirichlet_zero. This is the quadratic form of the
/// second-order stiffness matrix, so it pairs exactly with `laplacian`.
double dirichlet_energy(const ScalarField& a);

/// ||U||^2 = ||u1||_{H^1}^2 + ||u2||_{L^2}^2 with the cell-sum gradient.
double energy_norm_sq(const StateVector& U);
double energy_norm(const StateVector& U);

double l2_norm(const ScalarField& a);

/// Central second difference (order 2 or 4). dirichlet_zero uses ghost zeros,
/// periodic wraps with period n_points * spacing.
ScalarField laplacian(const ScalarField& a, int order = 2);

/// Central first difference (order 2 or 4), same boundary conventions.
ScalarField gradient(const ScalarField& a, int order = 2);

/// rho(t, x) = sum_n exp(-rate * |x - beta_n t - offset_n|).
struct EnvelopeWeight {
  double rate = 0.1;
  std::vector<double> velocities;
  std::vector<double> offsets;  // empty means all zero

  EnvelopeWeight() = default;
  EnvelopeWeight(double rate, std::vector<double> velocities,
                 std::vector<double> offsets = {});
};

double envelope_eval(const EnvelopeWeight& e, double x, double t);

/// Field snapshot CSV: header `x,u,ut`, one row per node, full double
/// precision (17 significant digits).
void write_snapshot_csv(const StateVector& U, const std::string& path);
StateVector read_snapshot_csv(const std::string& path,
                              Boundary boundary = Boundary::dirichlet_zero);

}  // namespace nlkg
