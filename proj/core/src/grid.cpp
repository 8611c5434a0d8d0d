#include "nlkg/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlkg {

Grid1D Grid1D::make(double half_width, int n_points, Boundary boundary) {
  if (!(half_width > 0.0)) throw ConfigError("Grid1D: half_width must be > 0");
  if (n_points < 16) throw ConfigError("Grid1D: n_points must be >= 16");
  return Grid1D{half_width, n_points, boundary};
}

Eigen::ArrayXd Grid1D::nodes() const {
  Eigen::ArrayXd x(n_points);
  const double h = spacing();
  for (int i = 0; i < n_points; ++i) x[i] = -half_width + i * h;
  return x;
}

ScalarField::ScalarField(const Grid1D& g, Eigen::VectorXd v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.n_points)
    throw ConfigError("ScalarField: values length does not match grid");
}

ScalarField sample(const Grid1D& grid,
                   const std::function<double(double)>& f) {
  Eigen::VectorXd v(grid.n_points);
  const double h = grid.spacing();
  for (int i = 0; i < grid.n_points; ++i) v[i] = f(-grid.half_width + i * h);
  return ScalarField(grid, std::move(v));
}

ScalarField zero_field(const Grid1D& grid) {
  return ScalarField(grid, Eigen::VectorXd::Zero(grid.n_points));
}

StateVector::StateVector(ScalarField u, ScalarField ut)
    : first(std::move(u)), second(std::move(ut)) {
  if (!(first.grid == second.grid))
    throw ConfigError("StateVector: components live on different grids");
}

StateVector zero_state(const Grid1D& grid) {
  return StateVector(zero_field(grid), zero_field(grid));
}

namespace {
void require_same_grid(const Grid1D& a, const Grid1D& b, const char* who) {
  if (!(a == b)) throw ConfigError(std::string(who) + ": grid mismatch");
}
}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "operator+");
  return ScalarField(a.grid, a.values + b.values);
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "operator-");
  return ScalarField(a.grid, a.values - b.values);
}
ScalarField operator*(double s, const ScalarField& a) {
  return ScalarField(a.grid, s * a.values);
}
StateVector operator+(const StateVector& a, const StateVector& b) {
  return StateVector(a.first + b.first, a.second + b.second);
}
StateVector operator-(const StateVector& a, const StateVector& b) {
  return StateVector(a.first - b.first, a.second - b.second);
}
StateVector operator*(double s, const StateVector& a) {
  return StateVector(s * a.first, s * a.second);
}

double inner_l2(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "inner_l2");
  const double h = a.grid.spacing();
  double s = a.values.dot(b.values);
  if (a.grid.boundary == Boundary::dirichlet_zero) {
    const int n = a.grid.n_points;
    s -= 0.5 * (a.values[0] * b.values[0] + a.values[n - 1] * b.values[n - 1]);
  }
  return h * s;
}

double inner_pair(const StateVector& U, const StateVector& V) {
  return inner_l2(U.first, V.first) + inner_l2(U.second, V.second);
}

double dirichlet_energy(const ScalarField& a) {
  const int n = a.grid.n_points;
  const double h = a.grid.spacing();
  double s = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double d = a.values[i + 1] - a.values[i];
    s += d * d;
  }
  if (a.grid.boundary == Boundary::dirichlet_zero) {
    s += a.values[0] * a.values[0] + a.values[n - 1] * a.values[n - 1];
  } else {
    const double d = a.values[0] - a.values[n - 1];  // wrap cell
    s += d * d;
  }
  return s / h;
}

double energy_norm_sq(const StateVector& U) {
  return inner_l2(U.first, U.first) + dirichlet_energy(U.first) +
         inner_l2(U.second, U.second);
}

double energy_norm(const StateVector& U) { return std::sqrt(energy_norm_sq(U)); }

double l2_norm(const ScalarField& a) { return std::sqrt(inner_l2(a, a)); }

namespace {
// value at index i with boundary handling
inline double at(const Eigen::VectorXd& v, int i, int n, Boundary b) {
  if (i >= 0 && i < n) return v[i];
  if (b == Boundary::dirichlet_zero) return 0.0;
  return v[((i % n) + n) % n];
}
}  // namespace

ScalarField laplacian(const ScalarField& a, int order) {
  const int n = a.grid.n_points;
  if (n < 3) throw ConfigError("laplacian: n_points too small");
  if (order != 2 && order != 4)
    throw ConfigError("laplacian: stencil order must be 2 or 4");
  const double h = a.grid.spacing();
  const Boundary b = a.grid.boundary;
  Eigen::VectorXd out(n);
  if (order == 2) {
    const double c = 1.0 / (h * h);
    for (int i = 0; i < n; ++i)
      out[i] = c * (at(a.values, i - 1, n, b) - 2.0 * a.values[i] +
                    at(a.values, i + 1, n, b));
  } else {
    const double c = 1.0 / (12.0 * h * h);
    for (int i = 0; i < n; ++i)
      out[i] = c * (-at(a.values, i - 2, n, b) +
                    16.0 * at(a.values, i - 1, n, b) - 30.0 * a.values[i] +
                    16.0 * at(a.values, i + 1, n, b) -
                    at(a.values, i + 2, n, b));
  }
  return ScalarField(a.grid, std::move(out));
}

ScalarField gradient(const ScalarField& a, int order) {
  const int n = a.grid.n_points;
  if (order != 2 && order != 4)
    throw ConfigError("gradient: stencil order must be 2 or 4");
  const double h = a.grid.spacing();
  const Boundary b = a.grid.boundary;
  Eigen::VectorXd out(n);
  if (order == 2) {
    const double c = 1.0 / (2.0 * h);
    for (int i = 0; i < n; ++i)
      out[i] = c * (at(a.values, i + 1, n, b) - at(a.values, i - 1, n, b));
  } else {
    const double c = 1.0 / (12.0 * h);
    for (int i = 0; i < n; ++i)
      out[i] = c * (at(a.values, i - 2, n, b) -
                    8.0 * at(a.values, i - 1, n, b) +
                    8.0 * at(a.values, i + 1, n, b) -
                    at(a.values, i + 2, n, b));
  }
  return ScalarField(a.grid, std::move(out));
}

EnvelopeWeight::EnvelopeWeight(double rate_, std::vector<double> velocities_,
                               std::vector<double> offsets_)
    : rate(rate_), velocities(std::move(velocities_)),
      offsets(std::move(offsets_)) {
  if (!(rate > 0.0)) throw ConfigError("EnvelopeWeight: rate must be > 0");
  if (!offsets.empty() && offsets.size() != velocities.size())
    throw ConfigError("EnvelopeWeight: offsets/velocities size mismatch");
}

double envelope_eval(const EnvelopeWeight& e, double x, double t) {
  double s = 0.0;
  for (std::size_t n = 0; n < e.velocities.size(); ++n) {
    const double c =
        e.velocities[n] * t + (e.offsets.empty() ? 0.0 : e.offsets[n]);
    s += std::exp(-e.rate * std::abs(x - c));
  }
  return s;
}

void write_snapshot_csv(const StateVector& U, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_snapshot_csv: cannot open " + path);
  out << "x,u,ut\n";
  char buf[160];
  const double h = U.grid().spacing();
  for (int i = 0; i < U.grid().n_points; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                  -U.grid().half_width + i * h, U.first.values[i],
                  U.second.values[i]);
    out << buf;
  }
}

StateVector read_snapshot_csv(const std::string& path, Boundary boundary) {
  std::ifstream in(path);
  if (!in) throw ConfigError("read_snapshot_csv: cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> xs, us, uts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    double v[3];
    for (int k = 0; k < 3; ++k) {
      if (!std::getline(ss, tok, ',')) throw ConfigError("snapshot: bad row");
      v[k] = std::stod(tok);
    }
    xs.push_back(v[0]);
    us.push_back(v[1]);
    uts.push_back(v[2]);
  }
  const int n = static_cast<int>(xs.size());
  if (n < 16) throw ConfigError("snapshot: too few rows");
  Grid1D g = Grid1D::make(std::abs(xs.front()), n, boundary);
  Eigen::VectorXd u(n), ut(n);
  for (int i = 0; i < n; ++i) {
    u[i] = us[i];
    ut[i] = uts[i];
  }
  return StateVector(ScalarField(g, std::move(u)), ScalarField(g, std::move(ut)));
}

}  // namespace nlkg
