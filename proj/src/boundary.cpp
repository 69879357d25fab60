#include "swe/boundary.hpp"

namespace swe {

BoundaryData sample_boundary(const BoundaryFn& fn, const MacMesh& m, double t) {
  BoundaryData b;
  if (!fn) return b;
  b.enabled = true;
  const int nx = m.nx(), ny = m.ny();
  b.h_left.resize(ny);
  b.h_right.resize(ny);
  for (int j = 0; j < ny; ++j) {
    b.h_left[j] = fn(m.x()[0], m.yc(j), t).h;
    b.h_right[j] = fn(m.x()[nx], m.yc(j), t).h;
  }
  b.h_bottom.resize(nx);
  b.h_top.resize(nx);
  for (int i = 0; i < nx; ++i) {
    b.h_bottom[i] = fn(m.xc(i), m.y()[0], t).h;
    b.h_top[i] = fn(m.xc(i), m.y()[ny], t).h;
  }
  b.u1_bottom.resize(nx + 1);
  b.u1_top.resize(nx + 1);
  for (int i = 0; i <= nx; ++i) {
    b.u1_bottom[i] = fn(m.x()[i], m.y()[0], t).u1;
    b.u1_top[i] = fn(m.x()[i], m.y()[ny], t).u1;
  }
  b.u2_left.resize(ny + 1);
  b.u2_right.resize(ny + 1);
  for (int j = 0; j <= ny; ++j) {
    b.u2_left[j] = fn(m.x()[0], m.y()[j], t).u2;
    b.u2_right[j] = fn(m.x()[nx], m.y()[j], t).u2;
  }
  return b;
}

void apply_boundary_velocity(State& s, const MacMesh& m, const BoundaryFn* fn,
                             double t) {
  const int nx = m.nx(), ny = m.ny();
  const bool dirichlet = fn && *fn;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      if (m.xedge_interior(i, j)) continue;
      double val = 0.0;
      if (dirichlet && (i == 0 || i == nx) &&
          m.xedge_kind(i, j) == EdgeKind::Boundary)
        val = (*fn)(m.x()[i], m.yc(j), t).u1;
      s.u.u1[m.xedge_index(i, j)] = val;
    }
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (m.yedge_interior(i, j)) continue;
      double val = 0.0;
      if (dirichlet && (j == 0 || j == ny) &&
          m.yedge_kind(i, j) == EdgeKind::Boundary)
        val = (*fn)(m.xc(i), m.y()[j], t).u2;
      s.u.u2[m.yedge_index(i, j)] = val;
    }
}

}  // namespace swe
