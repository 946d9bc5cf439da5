#ifndef SKYLANE_FLOW_FIELD_HPP
#define SKYLANE_FLOW_FIELD_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "skylane/airspace.hpp"

namespace skylane {

/// Dirichlet data for one layer: the stream value varies linearly in the
/// coordinate transverse to the flow axis over the whole border
/// (value = slope * cross + offset) and is zero on obstacle nodes, so the
/// border itself is a streamline on the two sides parallel to the flow.
struct BoundaryConditionSpec {
  Axis axis = Axis::x;
  double slope = 1.0;
  double offset = 0.0;

  void validate() const;
  double value_at(double x, double y) const {
    return slope * (axis == Axis::x ? y : x) + offset;
  }
};

/// Stream function samples over a grid. `psi(i, j)` follows Grid indexing;
/// `phi` is present only for analytically generated fields.
struct FlowField {
  Grid grid;
  Axis axis = Axis::x;
  Eigen::ArrayXXd psi;
  std::optional<Eigen::ArrayXXd> phi;
  double residual = 0.0;   // max per-node defect, in stream-value units
  double fixed_min = 0.0;  // range of the fixed (boundary + obstacle) values
  double fixed_max = 0.0;

  bool has_obstacles() const { return grid.obstacle_count() > 0; }
  double fixed_span() const { return fixed_max - fixed_min; }
  /// Bilinear interpolation of psi at an arbitrary in-region point.
  double psi_at(double x, double y) const;
};

/// Superposition of doublet-plus-uniform terms, one per wrapped circular
/// zone; the real/imaginary parts of the sum give potential and stream
/// values that keep each circle a zero streamline.
struct AnalyticFlowSpec {
  std::vector<Vec2> centers;
  std::vector<double> radii;

  void validate() const;
};

/// (phi, psi) at one point. Throws SingularPoint at a zone center.
std::pair<double, double> analytic_point(const AnalyticFlowSpec& spec, const Vec2& p);
std::vector<std::pair<double, double>> analytic_field(const AnalyticFlowSpec& spec,
                                                      const std::vector<Vec2>& points);

/// Evaluates the analytic solution on a grid; obstacle nodes get zero.
FlowField analytic_flow_field(const AnalyticFlowSpec& spec, const Grid& grid,
                              Axis axis = Axis::x);

/// Fixed values for every boundary and obstacle node (NaN on interior
/// nodes). Corner nodes take the value both adjacent sides agree on;
/// disagreement beyond 1e-9 raises InconsistentCorners.
Eigen::ArrayXXd boundary_values(const Grid& grid, const BoundaryConditionSpec& bc);

/// Five-point-stencil equations over the interior nodes with known
/// neighbor values moved to the right-hand side.
struct LinearSystem {
  Eigen::SparseMatrix<double> matrix;  // interior x interior, SPD
  Eigen::VectorXd rhs;
  std::vector<int> interior_nodes;  // grid linear node id per row
};
LinearSystem assemble_system(const Grid& grid, const Eigen::ArrayXXd& fixed_values);

struct SolverOptions {
  double tolerance = 1e-8;        // relative to the fixed-value span
  int direct_node_limit = 250000; // above this, relaxation sweeps are used
  double relaxation = 1.8;        // SOR factor for the iterative fallback
};

/// Solves the interior stream values against arbitrary fixed node values.
FlowField solve_with_fixed_values(const Grid& grid, const Eigen::ArrayXXd& fixed_values,
                                  const SolverOptions& options = {}, Axis axis = Axis::x);

/// Standard per-layer solve: Dirichlet data from the boundary spec.
FlowField solve_stream_function(const Grid& grid, const BoundaryConditionSpec& bc,
                                const SolverOptions& options = {});

/// Max per-node defect of the stencil equations, in stream-value units.
double stencil_residual(const Grid& grid, const Eigen::ArrayXXd& psi);

/// Max central-difference defect of the conjugate-pair conditions over
/// interior nodes with a full non-obstacle neighborhood. Requires phi.
double verify_cauchy_riemann(const FlowField& field);

void write_field_dump(const FlowField& field, std::ostream& out);

struct FieldDump {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0, x_min = 0.0, y_min = 0.0;
  Eigen::ArrayXXd psi;
};
FieldDump read_field_dump(std::istream& in);

}  // namespace skylane

#endif  // SKYLANE_FLOW_FIELD_HPP
