#include "swe/fields.hpp"

namespace swe {

ScalarField make_pressure(const ScalarField& h, double g) {
  ScalarField p;
  p.role = ScalarRole::Pressure;
  p.v.resize(h.v.size());
  const std::size_t n = h.v.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
    p.v[c] = 0.5 * g * h.v[c] * h.v[c];
  return p;
}

DualHeightField dual_height(const ScalarField& h, const MacMesh& m) {
  DualHeightField d;
  d.on_x.assign(m.n_xedges(), 0.0);
  d.on_y.assign(m.n_yedges(), 0.0);
  const int nx = m.nx(), ny = m.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int e = m.xedge_index(i, j);
      const bool l = m.cell_valid(i - 1, j), r = m.cell_valid(i, j);
      if (l && r) {
        const double wl = m.xedge_half_area(i, j, true);
        const double wr = m.xedge_half_area(i, j, false);
        d.on_x[e] = (wl * h.v[m.cell_index(i - 1, j)] +
                     wr * h.v[m.cell_index(i, j)]) /
                    (wl + wr);
      } else if (l) {
        d.on_x[e] = h.v[m.cell_index(i - 1, j)];
      } else if (r) {
        d.on_x[e] = h.v[m.cell_index(i, j)];
      }
    }
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int e = m.yedge_index(i, j);
      const bool b = m.cell_valid(i, j - 1), t = m.cell_valid(i, j);
      if (b && t) {
        const double wb = m.yedge_half_area(i, j, true);
        const double wt = m.yedge_half_area(i, j, false);
        d.on_y[e] = (wb * h.v[m.cell_index(i, j - 1)] +
                     wt * h.v[m.cell_index(i, j)]) /
                    (wb + wt);
      } else if (b) {
        d.on_y[e] = h.v[m.cell_index(i, j - 1)];
      } else if (t) {
        d.on_y[e] = h.v[m.cell_index(i, j)];
      }
    }
  return d;
}

}  // namespace swe
