#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "swe/boundary.hpp"
#include "swe/fields.hpp"
#include "swe/mesh.hpp"
#include "swe/schemes.hpp"

namespace swe {

// ---------------------------------------------------------------------------
// Travelling vortex (smooth convergence case).
// ---------------------------------------------------------------------------
struct VortexParams {
  double c = 1.0;
  double ax = 1.0, ay = 1.0;  // translation velocity
  double g = 1.0;
};

// Antiderivative of f^2 with F(0) = 0 for f(xi) = 10 xi^2 (1-xi)^2 on (0,1).
double vortex_F(double xi);
FlowSample vortex_exact(double x, double y, double t, const VortexParams& p);

// ---------------------------------------------------------------------------
// Exact Riemann solver (dam-break oracle): 1-wave and 2-wave connected by a
// constant star region.
// ---------------------------------------------------------------------------
struct RiemannProblem {
  double g = 9.81;
  double hl = 1.0, ul = 0.0;
  double hr = 0.2, ur = 0.0;
};

struct RiemannSolution {
  RiemannProblem prob;
  double h_star = 0.0, u_star = 0.0;
  bool left_rarefaction = true, right_rarefaction = false;
  double left_head = 0.0, left_tail = 0.0;    // wave speeds (head<=tail)
  double right_head = 0.0, right_tail = 0.0;  // equal for a shock
  FlowSample sample(double xi) const;         // xi = (x - x0)/t
};

RiemannSolution solve_riemann(const RiemannProblem& prob);

// ---------------------------------------------------------------------------
// Rotating drop on a paraboloid (dry-zone case).
// ---------------------------------------------------------------------------
struct DropParams {
  double L = 4.0, h0 = 0.1, a = 1.0, eta = 0.5;
  double g = 9.81;
  double h_floor = 1e-8;
  double omega() const { return std::sqrt(2.0 * g * h0) / a; }
};

double drop_bathymetry(double x, double y, const DropParams& p);
FlowSample drop_exact(double x, double y, double t, const DropParams& p);

// ---------------------------------------------------------------------------
// Case presets.
// ---------------------------------------------------------------------------
struct CaseSpec {
  std::string name;
  int default_resolution = 0;
  std::function<MacMesh(int)> make_mesh;
  std::function<double(double, double)> bathymetry;  // null -> flat bottom
  ExactFn exact;                                     // null if none
  bool dirichlet_exact = false;  // impose exact data on the domain walls
  double g = 9.81;
  double zeta_stab = 0.0;
  double h_floor = 1e-8;
  bool entropy_safe = false;
  std::function<double(const MacMesh&)> default_dt;
  double default_T = 1.0;
  std::function<void(const MacMesh&, State&)> init;  // overrides exact at t=0
  double line_y = std::nan("");  // preset line-extract position
};

CaseSpec vortex_case(double g = 1.0);
CaseSpec riemann_case();
CaseSpec circular_dambreak_case();
CaseSpec partial_dambreak_case();
CaseSpec paraboloid_drop_case();
CaseSpec lake_at_rest_case();

CaseSpec make_case(const std::string& name);
std::vector<std::string> case_names();

// Midpoint-sampled initial state (or the case's own init), floored and with
// wall velocities applied.
State initial_state(const CaseSpec& spec, const MacMesh& m);

std::shared_ptr<ScalarField> sample_bathymetry(const CaseSpec& spec,
                                               const MacMesh& m);

SchemeConfig scheme_config(const CaseSpec& spec, const MacMesh& m,
                           SchemeKind kind);

}  // namespace swe
