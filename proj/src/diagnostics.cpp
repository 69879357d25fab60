#include "swe/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swe {

EnergyReport energy_totals(const State& s, const MacMesh& m, double g,
                           const ScalarField* z) {
  EnergyReport r;
  const DualHeightField hd = dual_height(s.h, m);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 1; i < m.nx(); ++i)
      if (m.xedge_interior(i, j)) {
        const int e = m.xedge_index(i, j);
        r.kinetic_total +=
            m.xedge_dual_area(i, j) * 0.5 * hd.on_x[e] * s.u.u1[e] * s.u.u1[e];
      }
  for (int j = 1; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.yedge_interior(i, j)) {
        const int e = m.yedge_index(i, j);
        r.kinetic_total +=
            m.yedge_dual_area(i, j) * 0.5 * hd.on_y[e] * s.u.u2[e] * s.u.u2[e];
      }
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      const double zk = z ? z->v[c] : 0.0;
      r.potential_total +=
          m.cell_area(i, j) * (0.5 * g * s.h.v[c] * s.h.v[c] + g * s.h.v[c] * zk);
    }
  r.entropy_total = r.kinetic_total + r.potential_total;
  return r;
}

BalanceCheck kinetic_balance_residual(const State& s_n, const State& s_np1,
                                      const FluxSet& flux, const MacMesh& m,
                                      const SchemeConfig& cfg, double dt) {
  BalanceCheck out;
  out.defect_x.assign(m.n_xedges(), 0.0);
  out.remainder_x.assign(m.n_xedges(), 0.0);
  out.defect_y.assign(m.n_yedges(), 0.0);
  out.remainder_y.assign(m.n_yedges(), 0.0);

  const DualHeightField hd_n = dual_height(s_n.h, m);
  const DualHeightField hd_np1 = dual_height(s_np1.h, m);
  const ScalarField p_np1 = make_pressure(s_np1.h, cfg.g);
  std::vector<double> dpx, dpy, dzx(m.n_xedges(), 0.0), dzy(m.n_yedges(), 0.0);
  edge_derivative(p_np1, m, dpx, dpy);
  if (cfg.bathymetry) bathy_gradient(*cfg.bathymetry, m, dzx, dzy);
  std::vector<double> hcx, hcy;
  centered_edge_height(s_np1.h, m, hcx, hcy);
  StabFlux stab;
  stabilization_flux(hd_n, s_n.u, m, cfg.zeta_stab, stab);

  for (int j = 0; j < m.ny(); ++j)
    for (int i = 1; i < m.nx(); ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      const double area = m.xedge_dual_area(i, j);
      const double u0 = s_n.u.u1[e], u1 = s_np1.u.u1[e];
      const double dE =
          (0.5 * hd_np1.on_x[e] * u1 * u1 - 0.5 * hd_n.on_x[e] * u0 * u0) / dt;

      // dual edges of D_sigma: (measure, F.n, u_eps) with outward sign folded
      const int cw = m.cell_index(i - 1, j), ce = m.cell_index(i, j);
      const double mw = m.xedge_length(j), me = m.xedge_length(j);
      const double ms = m.xperp_measure(i, j), mn = m.xperp_measure(i, j + 1);
      const int ds = m.xperp_index(i, j), dn = m.xperp_index(i, j + 1);
      const double eflux[4] = {-mw * flux.fx_par[cw], me * flux.fx_par[ce],
                               -ms * flux.fx_perp[ds], mn * flux.fx_perp[dn]};
      const double ueps[4] = {flux.ux_par[cw], flux.ux_par[ce],
                              flux.ux_perp[ds], flux.ux_perp[dn]};
      double fterm = 0.0, r2 = 0.0, r3 = 0.0;
      for (int k = 0; k < 4; ++k) {
        fterm += 0.5 * eflux[k] * ueps[k] * ueps[k];
        r2 -= 0.5 * eflux[k] * (ueps[k] - u0) * (ueps[k] - u0);
        r3 += eflux[k] * (ueps[k] - u0) * (u1 - u0);
      }
      fterm /= area;
      const double pterm = u1 * (dpx[e] + cfg.g * hcx[e] * dzx[e]);
      const double sterm = u1 * stab_sum_x(stab, m, i, j) / area;
      out.defect_x[e] = dE + fterm + pterm + sterm;
      out.remainder_x[e] = 0.5 / dt * hd_np1.on_x[e] * (u1 - u0) * (u1 - u0) +
                           (r2 + r3) / area;
      const double scale = std::max({std::abs(dE), std::abs(fterm),
                                     std::abs(pterm), std::abs(sterm), 1e-300});
      out.max_mismatch =
          std::max(out.max_mismatch,
                   std::abs(out.defect_x[e] + out.remainder_x[e]) / scale);
    }

  for (int j = 1; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      const double area = m.yedge_dual_area(i, j);
      const double u0 = s_n.u.u2[e], u1 = s_np1.u.u2[e];
      const double dE =
          (0.5 * hd_np1.on_y[e] * u1 * u1 - 0.5 * hd_n.on_y[e] * u0 * u0) / dt;
      const int cs = m.cell_index(i, j - 1), cn = m.cell_index(i, j);
      const double msn = m.yedge_length(i);
      const double mw = m.yperp_measure(i, j), me = m.yperp_measure(i + 1, j);
      const int dw = m.yperp_index(i, j), de = m.yperp_index(i + 1, j);
      const double eflux[4] = {-msn * flux.fy_par[cs], msn * flux.fy_par[cn],
                               -mw * flux.fy_perp[dw], me * flux.fy_perp[de]};
      const double ueps[4] = {flux.uy_par[cs], flux.uy_par[cn],
                              flux.uy_perp[dw], flux.uy_perp[de]};
      double fterm = 0.0, r2 = 0.0, r3 = 0.0;
      for (int k = 0; k < 4; ++k) {
        fterm += 0.5 * eflux[k] * ueps[k] * ueps[k];
        r2 -= 0.5 * eflux[k] * (ueps[k] - u0) * (ueps[k] - u0);
        r3 += eflux[k] * (ueps[k] - u0) * (u1 - u0);
      }
      fterm /= area;
      const double pterm = u1 * (dpy[e] + cfg.g * hcy[e] * dzy[e]);
      const double sterm = u1 * stab_sum_y(stab, m, i, j) / area;
      out.defect_y[e] = dE + fterm + pterm + sterm;
      out.remainder_y[e] = 0.5 / dt * hd_np1.on_y[e] * (u1 - u0) * (u1 - u0) +
                           (r2 + r3) / area;
      const double scale = std::max({std::abs(dE), std::abs(fterm),
                                     std::abs(pterm), std::abs(sterm), 1e-300});
      out.max_mismatch =
          std::max(out.max_mismatch,
                   std::abs(out.defect_y[e] + out.remainder_y[e]) / scale);
    }
  return out;
}

BalanceCheck potential_balance_residual(const State& s_n, const State& s_np1,
                                        const FluxSet& flux, const MacMesh& m,
                                        const SchemeConfig& cfg, double dt) {
  BalanceCheck out;
  const std::size_t nc = s_n.h.v.size();
  out.defect_cell.assign(nc, 0.0);
  out.remainder_cell.assign(nc, 0.0);
  const double g = cfg.g;

  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      const double h0 = s_n.h.v[c], h1 = s_np1.h.v[c];
      const double zk = cfg.bathymetry ? cfg.bathymetry->v[c] : 0.0;
      const double area = m.cell_area(i, j);
      const double dE = ((0.5 * g * h1 * h1 + g * h1 * zk) -
                         (0.5 * g * h0 * h0 + g * h0 * zk)) /
                        dt;

      // per-edge (signed flux sample, h_sigma, u.n) around K
      const int ew = m.xedge_index(i, j), ee = m.xedge_index(i + 1, j);
      const int es = m.yedge_index(i, j), en = m.yedge_index(i, j + 1);
      const double len[4] = {m.xedge_length(j), m.xedge_length(j),
                             m.yedge_length(i), m.yedge_length(i)};
      const double sgn[4] = {-1.0, 1.0, -1.0, 1.0};
      const double hs[4] = {flux.h1[ew], flux.h1[ee], flux.h2[es], flux.h2[en]};
      const double un[4] = {s_n.u.u1[ew], s_n.u.u1[ee], s_n.u.u2[es],
                            s_n.u.u2[en]};
      double div_pot = 0.0, div_mass = 0.0, div_u = 0.0, r2 = 0.0, r3 = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double a = sgn[k] * len[k];
        div_pot += a * 0.5 * g * hs[k] * hs[k] * un[k];
        div_mass += a * hs[k] * un[k];
        div_u += a * un[k];
        r2 -= a * 0.5 * g * (hs[k] - h0) * (hs[k] - h0) * un[k];
        r3 += a * g * (h1 - h0) * hs[k] * un[k];
      }
      div_pot /= area;
      div_mass /= area;
      div_u /= area;
      const double p0 = 0.5 * g * h0 * h0;
      out.defect_cell[c] = dE + div_pot + g * zk * div_mass + p0 * div_u;
      out.remainder_cell[c] =
          0.5 * g / dt * (h1 - h0) * (h1 - h0) + (r2 + r3) / area;
      const double scale =
          std::max({std::abs(dE), std::abs(div_pot), std::abs(g * zk * div_mass),
                    std::abs(p0 * div_u), 1e-300});
      out.max_mismatch =
          std::max(out.max_mismatch,
                   std::abs(out.defect_cell[c] + out.remainder_cell[c]) / scale);
    }
  return out;
}

double check_div_grad_duality(const ScalarField& h, const VelocityField& u,
                              const ScalarField& xi, const MacMesh& m,
                              const LimiterConfig& lim) {
  FluxSet flux;
  assemble_mass_fluxes(h, u, m, lim, nullptr, flux);
  const ScalarField div = div_cell(flux, m);
  std::vector<double> dxx, dxy;
  edge_derivative(xi, m, dxx, dxy);

  double term1 = 0.0, term2 = 0.0, mag = 0.0;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.active(i, j)) {
        const int c = m.cell_index(i, j);
        term1 += m.cell_area(i, j) * xi.v[c] * div.v[c];
        mag += std::abs(m.cell_area(i, j) * xi.v[c] * div.v[c]);
      }
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 1; i < m.nx(); ++i)
      if (m.xedge_interior(i, j)) {
        const int e = m.xedge_index(i, j);
        const double t = m.xedge_dual_area(i, j) * flux.h1[e] * u.u1[e] * dxx[e];
        term2 += t;
        mag += std::abs(t);
      }
  for (int j = 1; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.yedge_interior(i, j)) {
        const int e = m.yedge_index(i, j);
        const double t = m.yedge_dual_area(i, j) * flux.h2[e] * u.u2[e] * dxy[e];
        term2 += t;
        mag += std::abs(t);
      }
  if (mag == 0.0) return 0.0;
  return std::abs(term1 + term2) / mag;
}

double check_dual_mass_balance(const State& s_n, const State& s_np1,
                               const FluxSet& flux, const MacMesh& m,
                               double dt) {
  const DualHeightField hd0 = dual_height(s_n.h, m);
  const DualHeightField hd1 = dual_height(s_np1.h, m);
  double worst = 0.0, scale = 0.0;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 1; i < m.nx(); ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      const int cw = m.cell_index(i - 1, j), ce = m.cell_index(i, j);
      const double len = m.xedge_length(j);
      const double ms = m.xperp_measure(i, j), mn = m.xperp_measure(i, j + 1);
      const double fsum = len * (flux.fx_par[ce] - flux.fx_par[cw]) +
                          mn * flux.fx_perp[m.xperp_index(i, j + 1)] -
                          ms * flux.fx_perp[m.xperp_index(i, j)];
      const double r =
          m.xedge_dual_area(i, j) / dt * (hd1.on_x[e] - hd0.on_x[e]) + fsum;
      worst = std::max(worst, std::abs(r));
      scale = std::max({scale, std::abs(fsum),
                        m.xedge_dual_area(i, j) / dt *
                            std::max(std::abs(hd0.on_x[e]), std::abs(hd1.on_x[e]))});
    }
  for (int j = 1; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      const int cs = m.cell_index(i, j - 1), cn = m.cell_index(i, j);
      const double len = m.yedge_length(i);
      const double mw = m.yperp_measure(i, j), me = m.yperp_measure(i + 1, j);
      const double fsum = len * (flux.fy_par[cn] - flux.fy_par[cs]) +
                          me * flux.fy_perp[m.yperp_index(i + 1, j)] -
                          mw * flux.fy_perp[m.yperp_index(i, j)];
      const double r =
          m.yedge_dual_area(i, j) / dt * (hd1.on_y[e] - hd0.on_y[e]) + fsum;
      worst = std::max(worst, std::abs(r));
      scale = std::max({scale, std::abs(fsum),
                        m.yedge_dual_area(i, j) / dt *
                            std::max(std::abs(hd0.on_y[e]), std::abs(hd1.on_y[e]))});
    }
  return scale > 0.0 ? worst / scale : worst;
}

std::pair<double, double> l1_error(const State& s, const ExactFn& exact,
                                   const MacMesh& m) {
  const double t = s.time;
  double eh = 0.0, eu = 0.0;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.active(i, j))
        eh += m.cell_area(i, j) *
              std::abs(s.h.v[m.cell_index(i, j)] - exact(m.xc(i), m.yc(j), t).h);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 1; i < m.nx(); ++i)
      if (m.xedge_interior(i, j))
        eu += m.xedge_dual_area(i, j) *
              std::abs(s.u.u1[m.xedge_index(i, j)] -
                       exact(m.xedge_x(i), m.xedge_y(j), t).u1);
  for (int j = 1; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.yedge_interior(i, j))
        eu += m.yedge_dual_area(i, j) *
              std::abs(s.u.u2[m.yedge_index(i, j)] -
                       exact(m.yedge_x(i), m.yedge_y(j), t).u2);
  return {eh, eu};
}

std::vector<double> convergence_order(
    const std::vector<std::pair<double, double>>& errors) {
  if (errors.size() < 2)
    throw std::invalid_argument("convergence_order: need at least two rows");
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const auto& [d0, e0] = errors[k];
    const auto& [d1, e1] = errors[k + 1];
    if (!(d1 < d0))
      throw std::invalid_argument("convergence_order: mesh sizes not decreasing");
    orders.push_back(std::log(e0 / e1) / std::log(d0 / d1));
  }
  return orders;
}

std::pair<double, double> bv_time_norms(const std::vector<State>& trajectory,
                                        const MacMesh& m) {
  if (trajectory.size() < 2)
    throw std::invalid_argument("bv_time_norms: need at least two states");
  double bh = 0.0, bu = 0.0;
  for (std::size_t n = 0; n + 1 < trajectory.size(); ++n) {
    const State& a = trajectory[n];
    const State& b = trajectory[n + 1];
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i)
        if (m.active(i, j)) {
          const int c = m.cell_index(i, j);
          bh += m.cell_area(i, j) * std::abs(b.h.v[c] - a.h.v[c]);
        }
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 1; i < m.nx(); ++i)
        if (m.xedge_interior(i, j)) {
          const int e = m.xedge_index(i, j);
          bu += m.xedge_dual_area(i, j) * std::abs(b.u.u1[e] - a.u.u1[e]);
        }
    for (int j = 1; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i)
        if (m.yedge_interior(i, j)) {
          const int e = m.yedge_index(i, j);
          bu += m.yedge_dual_area(i, j) * std::abs(b.u.u2[e] - a.u.u2[e]);
        }
  }
  return {bh, bu};
}

}  // namespace swe
