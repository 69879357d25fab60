#pragma once

#include <functional>
#include <vector>

#include "swe/fields.hpp"
#include "swe/mesh.hpp"

namespace swe {

struct FlowSample {
  double h = 0.0, u1 = 0.0, u2 = 0.0;
};

// Pointwise (x, y, t) sampler of a flow; exact solutions and Dirichlet wall
// data share this shape.
using FlowFn = std::function<FlowSample(double x, double y, double t)>;
using ExactFn = FlowFn;

// Optional Dirichlet data on the domain perimeter (used by cases with a known
// exact solution whose far field crosses the walls).  Null means impermeable
// walls: u.n = 0 and vanishing mass flux on every wall edge.
using BoundaryFn = FlowFn;

// Perimeter samples for one time level.  Ghost heights sit at wall edge
// centers (inflow mass flux), ghost velocities at the wall trace of the dual
// meshes (inflow momentum flux).
struct BoundaryData {
  bool enabled = false;
  std::vector<double> h_left, h_right;    // per j = 0..ny-1
  std::vector<double> h_bottom, h_top;    // per i = 0..nx-1
  std::vector<double> u1_bottom, u1_top;  // per i = 0..nx
  std::vector<double> u2_left, u2_right;  // per j = 0..ny
};

BoundaryData sample_boundary(const BoundaryFn& fn, const MacMesh& m, double t);

// Writes wall-edge velocities: exact samples on the domain perimeter when fn
// is set, zero otherwise.  Mask walls are always zero.
void apply_boundary_velocity(State& s, const MacMesh& m, const BoundaryFn* fn,
                             double t);

}  // namespace swe
