#include "swe/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "swe/operators.hpp"

namespace swe {

double minmod2(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double minmod3(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(a, std::min(b, c));
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(a, std::max(b, c));
  return 0.0;
}

namespace {

// Limited interface value seen from the upwind side.  up/dn are the upwind and
// downwind neighbor values, behind the second upwind neighbor (has_behind
// false degrades to first order), theta the affine interpolation weight of the
// edge center between the two neighbor centers, measured from the upwind one.
inline double muscl_value(double up, double dn, double behind, bool has_behind,
                          double theta, const LimiterConfig& lim) {
  if (!has_behind) return up;
  double corr;
  if (lim.procedure == MusclProcedure::Calif) {
    const double tilde = up + theta * (dn - up);
    corr = 0.5 * minmod2(2.0 * (tilde - up), 2.0 * (up - behind));
  } else {
    corr = 0.5 * minmod3(0.5 * (dn - behind), lim.zeta_plus * (dn - up),
                         lim.zeta_minus * (up - behind));
  }
  if (lim.entropy_safe) {
    const double cap = 0.5 * std::abs(dn - up);
    corr = std::clamp(corr, -cap, cap);
  }
  return up + corr;
}

}  // namespace

void reconstruct_height(const ScalarField& h, const VelocityField& u,
                        const MacMesh& m, const LimiterConfig& lim,
                        std::vector<double>& h_on_x,
                        std::vector<double>& h_on_y) {
  const int nx = m.nx(), ny = m.ny();
  h_on_x.assign(m.n_xedges(), 0.0);
  h_on_y.assign(m.n_yedges(), 0.0);
  const bool upwind = lim.mode == LimiterMode::Upwind;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      const int e = m.xedge_index(i, j);
      if (!m.xedge_interior(i, j)) continue;
      const double hl = h.v[m.cell_index(i - 1, j)];
      const double hr = h.v[m.cell_index(i, j)];
      const double s = u.u1[e];
      if (s == 0.0) {
        h_on_x[e] = 0.5 * (hl + hr);
        continue;
      }
      const bool from_left = s > 0.0;
      const int ui = from_left ? i - 1 : i;
      const double up = from_left ? hl : hr;
      const double dn = from_left ? hr : hl;
      if (upwind) {
        h_on_x[e] = up;
        continue;
      }
      const int bi = from_left ? ui - 1 : ui + 1;
      const bool has_b = m.cell_valid(bi, j);
      const double behind = has_b ? h.v[m.cell_index(bi, j)] : 0.0;
      const int di = from_left ? i : i - 1;
      const double theta = m.dx(ui) / (m.dx(ui) + m.dx(di));
      h_on_x[e] = muscl_value(up, dn, behind, has_b, theta, lim);
    }

#pragma omp parallel for schedule(static)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int e = m.yedge_index(i, j);
      if (!m.yedge_interior(i, j)) continue;
      const double hb = h.v[m.cell_index(i, j - 1)];
      const double ht = h.v[m.cell_index(i, j)];
      const double s = u.u2[e];
      if (s == 0.0) {
        h_on_y[e] = 0.5 * (hb + ht);
        continue;
      }
      const bool from_below = s > 0.0;
      const int uj = from_below ? j - 1 : j;
      const double up = from_below ? hb : ht;
      const double dn = from_below ? ht : hb;
      if (upwind) {
        h_on_y[e] = up;
        continue;
      }
      const int bj = from_below ? uj - 1 : uj + 1;
      const bool has_b = m.cell_valid(i, bj);
      const double behind = has_b ? h.v[m.cell_index(i, bj)] : 0.0;
      const int dj = from_below ? j : j - 1;
      const double theta = m.dy(uj) / (m.dy(uj) + m.dy(dj));
      h_on_y[e] = muscl_value(up, dn, behind, has_b, theta, lim);
    }
}

void reconstruct_velocity(const VelocityField& u, const MacMesh& m,
                          const LimiterConfig& lim, const BoundaryData* bc,
                          FluxSet& flux) {
  const int nx = m.nx(), ny = m.ny();
  const bool upwind = lim.mode == LimiterMode::Upwind;
  flux.ux_par.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  flux.ux_perp.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), 0.0);
  flux.uy_par.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  flux.uy_perp.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), 0.0);
  const bool ghosts = bc && bc->enabled;

  // X dual mesh, parallel family: one dual edge inside each cell, between the
  // dual cells of its two X edges.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int c = m.cell_index(i, j);
      const double ul = u.u1[m.xedge_index(i, j)];
      const double ur = u.u1[m.xedge_index(i + 1, j)];
      const double s = flux.fx_par[c];
      if (s == 0.0) {
        flux.ux_par[c] = 0.5 * (ul + ur);
        continue;
      }
      const bool from_left = s > 0.0;
      const double up = from_left ? ul : ur;
      const double dn = from_left ? ur : ul;
      if (upwind) {
        flux.ux_par[c] = up;
        continue;
      }
      const int bi = from_left ? i - 1 : i + 2;
      const bool has_b = bi >= 0 && bi <= nx && m.xedge_interior(bi, j);
      const double behind = has_b ? u.u1[m.xedge_index(bi, j)] : 0.0;
      flux.ux_par[c] = muscl_value(up, dn, behind, has_b, 0.5, lim);
    }

  // X dual mesh, perpendicular family: on the horizontal grid lines.  Wall
  // rows carry flux only with Dirichlet data and stay first order.
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int d = m.xperp_index(i, j);
      const double s = flux.fx_perp[d];
      const bool has_below = j - 1 >= 0, has_above = j < ny;
      if (!has_below || !has_above) {
        if (s == 0.0) continue;
        if (!has_below)  // bottom wall: upward flux enters from outside
          flux.ux_perp[d] = s > 0.0 ? (ghosts ? bc->u1_bottom[i] : 0.0)
                                    : u.u1[m.xedge_index(i, j)];
        else  // top wall
          flux.ux_perp[d] = s > 0.0 ? u.u1[m.xedge_index(i, j - 1)]
                                    : (ghosts ? bc->u1_top[i] : 0.0);
        continue;
      }
      const double ub = u.u1[m.xedge_index(i, j - 1)];
      const double ut = u.u1[m.xedge_index(i, j)];
      if (s == 0.0) {
        flux.ux_perp[d] = 0.5 * (ub + ut);
        continue;
      }
      const bool from_below = s > 0.0;
      const double up = from_below ? ub : ut;
      const double dn = from_below ? ut : ub;
      if (upwind) {
        flux.ux_perp[d] = up;
        continue;
      }
      const int bj = from_below ? j - 2 : j + 1;
      const bool has_b = bj >= 0 && bj < ny && m.xedge_interior(i, bj);
      const double behind = has_b ? u.u1[m.xedge_index(i, bj)] : 0.0;
      const int uj = from_below ? j - 1 : j;
      const int dj = from_below ? j : j - 1;
      const double theta = m.dy(uj) / (m.dy(uj) + m.dy(dj));
      flux.ux_perp[d] = muscl_value(up, dn, behind, has_b, theta, lim);
    }

  // Y dual mesh, parallel family.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int c = m.cell_index(i, j);
      const double ub = u.u2[m.yedge_index(i, j)];
      const double ut = u.u2[m.yedge_index(i, j + 1)];
      const double s = flux.fy_par[c];
      if (s == 0.0) {
        flux.uy_par[c] = 0.5 * (ub + ut);
        continue;
      }
      const bool from_below = s > 0.0;
      const double up = from_below ? ub : ut;
      const double dn = from_below ? ut : ub;
      if (upwind) {
        flux.uy_par[c] = up;
        continue;
      }
      const int bj = from_below ? j - 1 : j + 2;
      const bool has_b = bj >= 0 && bj <= ny && m.yedge_interior(i, bj);
      const double behind = has_b ? u.u2[m.yedge_index(i, bj)] : 0.0;
      flux.uy_par[c] = muscl_value(up, dn, behind, has_b, 0.5, lim);
    }

  // Y dual mesh, perpendicular family: on the vertical grid lines.
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int d = m.yperp_index(i, j);
      const double s = flux.fy_perp[d];
      const bool has_left = i - 1 >= 0, has_right = i < nx;
      if (!has_left || !has_right) {
        if (s == 0.0) continue;
        if (!has_left)
          flux.uy_perp[d] = s > 0.0 ? (ghosts ? bc->u2_left[j] : 0.0)
                                    : u.u2[m.yedge_index(i, j)];
        else
          flux.uy_perp[d] = s > 0.0 ? u.u2[m.yedge_index(i - 1, j)]
                                    : (ghosts ? bc->u2_right[j] : 0.0);
        continue;
      }
      const double ul = u.u2[m.yedge_index(i - 1, j)];
      const double ur = u.u2[m.yedge_index(i, j)];
      if (s == 0.0) {
        flux.uy_perp[d] = 0.5 * (ul + ur);
        continue;
      }
      const bool from_left = s > 0.0;
      const double up = from_left ? ul : ur;
      const double dn = from_left ? ur : ul;
      if (upwind) {
        flux.uy_perp[d] = up;
        continue;
      }
      const int bi = from_left ? i - 2 : i + 1;
      const bool has_b = bi >= 0 && bi < nx && m.yedge_interior(bi, j);
      const double behind = has_b ? u.u2[m.yedge_index(bi, j)] : 0.0;
      const int ui = from_left ? i - 1 : i;
      const int di = from_left ? i : i - 1;
      const double theta = m.dx(ui) / (m.dx(ui) + m.dx(di));
      flux.uy_perp[d] = muscl_value(up, dn, behind, has_b, theta, lim);
    }
}

}  // namespace swe
