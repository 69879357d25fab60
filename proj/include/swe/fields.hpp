#pragma once

#include <vector>

#include "swe/mesh.hpp"

namespace swe {

enum class ScalarRole { Height, Pressure, Bathymetry, Auxiliary };

// Cell-centered scalar; inactive cells hold 0 and are never read by kernels.
struct ScalarField {
  ScalarRole role = ScalarRole::Auxiliary;
  std::vector<double> v;

  ScalarField() = default;
  ScalarField(const MacMesh& m, ScalarRole r, double fill = 0.0)
      : role(r), v(static_cast<std::size_t>(m.nx()) * m.ny(), fill) {}

  double& operator()(const MacMesh& m, int i, int j) { return v[m.cell_index(i, j)]; }
  double operator()(const MacMesh& m, int i, int j) const { return v[m.cell_index(i, j)]; }
};

// Staggered velocity: u1 on X edges, u2 on Y edges; zero on wall edges.
struct VelocityField {
  std::vector<double> u1, u2;

  VelocityField() = default;
  explicit VelocityField(const MacMesh& m)
      : u1(m.n_xedges(), 0.0), u2(m.n_yedges(), 0.0) {}
};

struct State {
  ScalarField h;
  VelocityField u;
  double time = 0.0;
};

// Water height averaged onto the dual cells, one array per orientation.
struct DualHeightField {
  std::vector<double> on_x, on_y;  // X-edge lattice / Y-edge lattice
};

ScalarField make_pressure(const ScalarField& h, double g);
DualHeightField dual_height(const ScalarField& h, const MacMesh& m);

}  // namespace swe
