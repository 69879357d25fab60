#include "swe/operators.hpp"

namespace swe {

void FluxSet::resize(const MacMesh& m) {
  const std::size_t nc = static_cast<std::size_t>(m.nx()) * m.ny();
  const std::size_t np = static_cast<std::size_t>(m.nx() + 1) * (m.ny() + 1);
  f1.assign(m.n_xedges(), 0.0);
  f2.assign(m.n_yedges(), 0.0);
  h1.assign(m.n_xedges(), 0.0);
  h2.assign(m.n_yedges(), 0.0);
  fx_par.assign(nc, 0.0);
  fx_perp.assign(np, 0.0);
  fy_par.assign(nc, 0.0);
  fy_perp.assign(np, 0.0);
  ux_par.assign(nc, 0.0);
  ux_perp.assign(np, 0.0);
  uy_par.assign(nc, 0.0);
  uy_perp.assign(np, 0.0);
}

void assemble_mass_fluxes(const ScalarField& h, const VelocityField& u,
                          const MacMesh& m, const LimiterConfig& lim,
                          const BoundaryData* bc, FluxSet& flux) {
  const int nx = m.nx(), ny = m.ny();
  flux.f1.assign(m.n_xedges(), 0.0);
  flux.f2.assign(m.n_yedges(), 0.0);
  reconstruct_height(h, u, m, lim, flux.h1, flux.h2);

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int e = m.xedge_index(i, j);
      if (m.xedge_interior(i, j)) {
        flux.f1[e] = flux.h1[e] * u.u1[e];
      } else if (bc && bc->enabled && (i == 0 || i == nx) &&
                 m.xedge_kind(i, j) == EdgeKind::Boundary) {
        const double s = u.u1[e];
        double hs = 0.0;
        if (i == 0)
          hs = s > 0.0 ? bc->h_left[j] : h.v[m.cell_index(0, j)];
        else
          hs = s > 0.0 ? h.v[m.cell_index(nx - 1, j)] : bc->h_right[j];
        flux.h1[e] = hs;
        flux.f1[e] = hs * s;
      }
    }
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int e = m.yedge_index(i, j);
      if (m.yedge_interior(i, j)) {
        flux.f2[e] = flux.h2[e] * u.u2[e];
      } else if (bc && bc->enabled && (j == 0 || j == ny) &&
                 m.yedge_kind(i, j) == EdgeKind::Boundary) {
        const double s = u.u2[e];
        double hs = 0.0;
        if (j == 0)
          hs = s > 0.0 ? bc->h_bottom[i] : h.v[m.cell_index(i, 0)];
        else
          hs = s > 0.0 ? h.v[m.cell_index(i, ny - 1)] : bc->h_top[i];
        flux.h2[e] = hs;
        flux.f2[e] = hs * s;
      }
    }
}

void assemble_dual_fluxes(const MacMesh& m, FluxSet& flux) {
  const int nx = m.nx(), ny = m.ny();
  const std::size_t nc = static_cast<std::size_t>(nx) * ny;
  const std::size_t np = static_cast<std::size_t>(nx + 1) * (ny + 1);
  flux.fx_par.assign(nc, 0.0);
  flux.fx_perp.assign(np, 0.0);
  flux.fy_par.assign(nc, 0.0);
  flux.fy_perp.assign(np, 0.0);

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int c = m.cell_index(i, j);
      flux.fx_par[c] =
          0.5 * (flux.f1[m.xedge_index(i, j)] + flux.f1[m.xedge_index(i + 1, j)]);
      flux.fy_par[c] =
          0.5 * (flux.f2[m.yedge_index(i, j)] + flux.f2[m.yedge_index(i, j + 1)]);
    }

#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      // X dual mesh: dual edge along grid line y_j at x_i, flux along e2 from
      // the halves of the Y edges tau = (i-1,j), tau2 = (i,j).
      {
        const double meas = m.xperp_measure(i, j);
        if (meas > 0.0) {
          double num = 0.0;
          if (i - 1 >= 0)
            num += 0.5 * m.yedge_length(i - 1) * flux.f2[m.yedge_index(i - 1, j)];
          if (i < nx) num += 0.5 * m.yedge_length(i) * flux.f2[m.yedge_index(i, j)];
          flux.fx_perp[m.xperp_index(i, j)] = num / meas;
        }
      }
      // Y dual mesh: dual edge along grid line x_i at y_j, flux along e1.
      {
        const double meas = m.yperp_measure(i, j);
        if (meas > 0.0) {
          double num = 0.0;
          if (j - 1 >= 0)
            num += 0.5 * m.xedge_length(j - 1) * flux.f1[m.xedge_index(i, j - 1)];
          if (j < ny) num += 0.5 * m.xedge_length(j) * flux.f1[m.xedge_index(i, j)];
          flux.fy_perp[m.yperp_index(i, j)] = num / meas;
        }
      }
    }
}

ScalarField div_cell(const FluxSet& flux, const MacMesh& m) {
  ScalarField d(m, ScalarRole::Auxiliary);
  const int nx = m.nx(), ny = m.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const double sum =
          m.xedge_length(j) * (flux.f1[m.xedge_index(i + 1, j)] -
                               flux.f1[m.xedge_index(i, j)]) +
          m.yedge_length(i) * (flux.f2[m.yedge_index(i, j + 1)] -
                               flux.f2[m.yedge_index(i, j)]);
      d.v[m.cell_index(i, j)] = sum / m.cell_area(i, j);
    }
  return d;
}

ScalarField div_velocity(const VelocityField& u, const MacMesh& m) {
  ScalarField d(m, ScalarRole::Auxiliary);
  const int nx = m.nx(), ny = m.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const double sum =
          m.xedge_length(j) *
              (u.u1[m.xedge_index(i + 1, j)] - u.u1[m.xedge_index(i, j)]) +
          m.yedge_length(i) *
              (u.u2[m.yedge_index(i, j + 1)] - u.u2[m.yedge_index(i, j)]);
      d.v[m.cell_index(i, j)] = sum / m.cell_area(i, j);
    }
  return d;
}

void edge_derivative(const ScalarField& xi, const MacMesh& m,
                     std::vector<double>& on_x, std::vector<double>& on_y) {
  const int nx = m.nx(), ny = m.ny();
  on_x.assign(m.n_xedges(), 0.0);
  on_y.assign(m.n_yedges(), 0.0);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      on_x[e] = m.xedge_length(j) / m.xedge_dual_area(i, j) *
                (xi.v[m.cell_index(i, j)] - xi.v[m.cell_index(i - 1, j)]);
    }
#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      on_y[e] = m.yedge_length(i) / m.yedge_dual_area(i, j) *
                (xi.v[m.cell_index(i, j)] - xi.v[m.cell_index(i, j - 1)]);
    }
}

void bathy_gradient(const ScalarField& z, const MacMesh& m,
                    std::vector<double>& on_x, std::vector<double>& on_y) {
  edge_derivative(z, m, on_x, on_y);
}

void centered_edge_height(const ScalarField& h, const MacMesh& m,
                          std::vector<double>& on_x, std::vector<double>& on_y) {
  const int nx = m.nx(), ny = m.ny();
  on_x.assign(m.n_xedges(), 0.0);
  on_y.assign(m.n_yedges(), 0.0);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i)
      if (m.xedge_interior(i, j))
        on_x[m.xedge_index(i, j)] =
            0.5 * (h.v[m.cell_index(i - 1, j)] + h.v[m.cell_index(i, j)]);
#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (m.yedge_interior(i, j))
        on_y[m.yedge_index(i, j)] =
            0.5 * (h.v[m.cell_index(i, j - 1)] + h.v[m.cell_index(i, j)]);
}

void momentum_divergence(const FluxSet& flux, const MacMesh& m,
                         std::vector<double>& on_x, std::vector<double>& on_y) {
  const int nx = m.nx(), ny = m.ny();
  on_x.assign(m.n_xedges(), 0.0);
  on_y.assign(m.n_yedges(), 0.0);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int cw = m.cell_index(i - 1, j), ce = m.cell_index(i, j);
      const int ds = m.xperp_index(i, j), dn = m.xperp_index(i, j + 1);
      const double sum =
          m.xedge_length(j) * (flux.fx_par[ce] * flux.ux_par[ce] -
                               flux.fx_par[cw] * flux.ux_par[cw]) +
          m.xperp_measure(i, j + 1) * flux.fx_perp[dn] * flux.ux_perp[dn] -
          m.xperp_measure(i, j) * flux.fx_perp[ds] * flux.ux_perp[ds];
      on_x[m.xedge_index(i, j)] = sum / m.xedge_dual_area(i, j);
    }
#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int cs = m.cell_index(i, j - 1), cn = m.cell_index(i, j);
      const int dw = m.yperp_index(i, j), de = m.yperp_index(i + 1, j);
      const double sum =
          m.yedge_length(i) * (flux.fy_par[cn] * flux.uy_par[cn] -
                               flux.fy_par[cs] * flux.uy_par[cs]) +
          m.yperp_measure(i + 1, j) * flux.fy_perp[de] * flux.uy_perp[de] -
          m.yperp_measure(i, j) * flux.fy_perp[dw] * flux.uy_perp[dw];
      on_y[m.yedge_index(i, j)] = sum / m.yedge_dual_area(i, j);
    }
}

void stabilization_flux(const DualHeightField& hd, const VelocityField& u,
                        const MacMesh& m, double zeta, StabFlux& stab) {
  const int nx = m.nx(), ny = m.ny();
  const std::size_t nc = static_cast<std::size_t>(nx) * ny;
  const std::size_t np = static_cast<std::size_t>(nx + 1) * (ny + 1);
  stab.enabled = zeta > 0.0;
  stab.x_par.assign(nc, 0.0);
  stab.x_perp.assign(np, 0.0);
  stab.y_par.assign(nc, 0.0);
  stab.y_perp.assign(np, 0.0);
  if (!stab.enabled) return;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int c = m.cell_index(i, j);
      if (m.xedge_interior(i, j) && m.xedge_interior(i + 1, j)) {
        const int ea = m.xedge_index(i, j), eb = m.xedge_index(i + 1, j);
        const double heps = 0.5 * (hd.on_x[ea] + hd.on_x[eb]);
        stab.x_par[c] = zeta * heps * m.dx(i) * (u.u1[ea] - u.u1[eb]);
      }
      if (m.yedge_interior(i, j) && m.yedge_interior(i, j + 1)) {
        const int ea = m.yedge_index(i, j), eb = m.yedge_index(i, j + 1);
        const double heps = 0.5 * (hd.on_y[ea] + hd.on_y[eb]);
        stab.y_par[c] = zeta * heps * m.dy(j) * (u.u2[ea] - u.u2[eb]);
      }
    }
#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      if (!m.xedge_interior(i, j - 1) || !m.xedge_interior(i, j)) continue;
      const int ea = m.xedge_index(i, j - 1), eb = m.xedge_index(i, j);
      const double heps = 0.5 * (hd.on_x[ea] + hd.on_x[eb]);
      const double dist = 0.5 * (m.dy(j - 1) + m.dy(j));
      stab.x_perp[m.xperp_index(i, j)] = zeta * heps * dist * (u.u1[ea] - u.u1[eb]);
    }
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.yedge_interior(i - 1, j) || !m.yedge_interior(i, j)) continue;
      const int ea = m.yedge_index(i - 1, j), eb = m.yedge_index(i, j);
      const double heps = 0.5 * (hd.on_y[ea] + hd.on_y[eb]);
      const double dist = 0.5 * (m.dx(i - 1) + m.dx(i));
      stab.y_perp[m.yperp_index(i, j)] = zeta * heps * dist * (u.u2[ea] - u.u2[eb]);
    }
}

double stab_sum_x(const StabFlux& s, const MacMesh& m, int i, int j) {
  if (!s.enabled) return 0.0;
  double sum = 0.0;
  if (i < m.nx()) sum += s.x_par[m.cell_index(i, j)];
  if (i - 1 >= 0) sum -= s.x_par[m.cell_index(i - 1, j)];
  sum += s.x_perp[m.xperp_index(i, j + 1)];
  sum -= s.x_perp[m.xperp_index(i, j)];
  return sum;
}

double stab_sum_y(const StabFlux& s, const MacMesh& m, int i, int j) {
  if (!s.enabled) return 0.0;
  double sum = 0.0;
  if (j < m.ny()) sum += s.y_par[m.cell_index(i, j)];
  if (j - 1 >= 0) sum -= s.y_par[m.cell_index(i, j - 1)];
  sum += s.y_perp[m.yperp_index(i + 1, j)];
  sum -= s.y_perp[m.yperp_index(i, j)];
  return sum;
}

void total_momentum_flux(const ScalarField& h, const VelocityField& u,
                         const ScalarField& z, const MacMesh& m,
                         const LimiterConfig& lim, double g,
                         const BoundaryData* bc, std::vector<double>& on_x,
                         std::vector<double>& on_y) {
  FluxSet flux;
  assemble_mass_fluxes(h, u, m, lim, bc, flux);
  assemble_dual_fluxes(m, flux);
  reconstruct_velocity(u, m, lim, bc, flux);
  momentum_divergence(flux, m, on_x, on_y);

  std::vector<double> hcx, hcy, dhx, dhy, dzx, dzy;
  centered_edge_height(h, m, hcx, hcy);
  edge_derivative(h, m, dhx, dhy);
  bathy_gradient(z, m, dzx, dzy);
  const int nx = m.nx(), ny = m.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      on_x[e] += g * hcx[e] * (dhx[e] + dzx[e]);
    }
#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      on_y[e] += g * hcy[e] * (dhy[e] + dzy[e]);
    }
}

}  // namespace swe
