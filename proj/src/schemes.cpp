#include "swe/schemes.hpp"

#include <cmath>

namespace swe {

namespace {

// Mass update + flooring; returns the raw (pre-floor) field through `raw` so
// the caller can account for created mass deterministically.
void mass_update(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                 double dt, const FluxSet& flux, ScalarField& h_new,
                 StepStats* stats) {
  const int nx = m.nx(), ny = m.ny();
  h_new = ScalarField(m, ScalarRole::Height);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      const double div =
          (m.xedge_length(j) * (flux.f1[m.xedge_index(i + 1, j)] -
                                flux.f1[m.xedge_index(i, j)]) +
           m.yedge_length(i) * (flux.f2[m.yedge_index(i, j + 1)] -
                                flux.f2[m.yedge_index(i, j)])) /
          m.cell_area(i, j);
      h_new.v[c] = s.h.v[c] - dt * div;
    }
  // serial flooring pass: keeps the created-mass tally order-stable
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      if (h_new.v[c] < cfg.h_floor) {
        if (stats) {
          ++stats->flooring_events;
          stats->floor_mass_added += m.cell_area(i, j) * (cfg.h_floor - h_new.v[c]);
        }
        h_new.v[c] = cfg.h_floor;
      }
    }
  if (stats) {
    // wall mass budget (zero for impermeable walls)
    double out = 0.0;
    for (int j = 0; j < ny; ++j) {
      out -= m.xedge_length(j) * flux.f1[m.xedge_index(0, j)];
      out += m.xedge_length(j) * flux.f1[m.xedge_index(nx, j)];
    }
    for (int i = 0; i < nx; ++i) {
      out -= m.yedge_length(i) * flux.f2[m.yedge_index(i, 0)];
      out += m.yedge_length(i) * flux.f2[m.yedge_index(i, ny)];
    }
    stats->boundary_outflux_dt += dt * out;
  }
}

}  // namespace

State advance_substep(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                      double dt, PressureCoupling pc, StepStats* stats,
                      FluxSet* keep_flux) {
  const LimiterConfig lim = cfg.effective_limiter();
  const BoundaryData bc = cfg.boundary ? sample_boundary(cfg.boundary, m, s.time)
                                       : BoundaryData{};
  const BoundaryData* bcp = bc.enabled ? &bc : nullptr;

  FluxSet local;
  FluxSet& flux = keep_flux ? *keep_flux : local;
  assemble_mass_fluxes(s.h, s.u, m, lim, bcp, flux);
  assemble_dual_fluxes(m, flux);
  reconstruct_velocity(s.u, m, lim, bcp, flux);

  State out;
  out.time = s.time + dt;
  mass_update(s, m, cfg, dt, flux, out.h, stats);

  // gradients of the surface terms, at the coupling's time level
  const ScalarField& h_for_grad = pc == PressureCoupling::Updated ? out.h : s.h;
  std::vector<double> hcx, hcy;
  centered_edge_height(h_for_grad, m, hcx, hcy);
  std::vector<double> dzx(m.n_xedges(), 0.0), dzy(m.n_yedges(), 0.0);
  if (cfg.bathymetry) bathy_gradient(*cfg.bathymetry, m, dzx, dzy);
  std::vector<double> gx, gy;  // d_sigma p + g h_c d_sigma z  (or the factored
                               // g h_c d_sigma (h+z) form of the Heun stages)
  if (pc == PressureCoupling::Updated) {
    const ScalarField p = make_pressure(out.h, cfg.g);
    std::vector<double> dpx, dpy;
    edge_derivative(p, m, dpx, dpy);
    gx.resize(dpx.size());
    gy.resize(dpy.size());
    for (std::size_t e = 0; e < dpx.size(); ++e)
      gx[e] = dpx[e] + cfg.g * hcx[e] * dzx[e];
    for (std::size_t e = 0; e < dpy.size(); ++e)
      gy[e] = dpy[e] + cfg.g * hcy[e] * dzy[e];
  } else {
    std::vector<double> dhx, dhy;
    edge_derivative(s.h, m, dhx, dhy);
    gx.resize(dhx.size());
    gy.resize(dhy.size());
    for (std::size_t e = 0; e < dhx.size(); ++e)
      gx[e] = cfg.g * hcx[e] * (dhx[e] + dzx[e]);
    for (std::size_t e = 0; e < dhy.size(); ++e)
      gy[e] = cfg.g * hcy[e] * (dhy[e] + dzy[e]);
  }

  std::vector<double> conv_x, conv_y;
  momentum_divergence(flux, m, conv_x, conv_y);

  const DualHeightField hd_n = dual_height(s.h, m);
  const DualHeightField hd_np1 = dual_height(out.h, m);

  StabFlux stab;
  stabilization_flux(hd_n, s.u, m, cfg.zeta_stab, stab);

  out.u = VelocityField(m);
  const int nx = m.nx(), ny = m.ny();
  const double dry = 10.0 * cfg.h_floor;
  int bad = 0;
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      const double hnew = hd_np1.on_x[e];
      if (hnew <= 0.0) {
        bad |= 1;
        continue;
      }
      const double rhs =
          hd_n.on_x[e] * s.u.u1[e] -
          dt * (conv_x[e] + gx[e] +
                stab_sum_x(stab, m, i, j) / m.xedge_dual_area(i, j));
      out.u.u1[e] = hnew <= dry ? 0.0 : rhs / hnew;
    }
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      const double hnew = hd_np1.on_y[e];
      if (hnew <= 0.0) {
        bad |= 1;
        continue;
      }
      const double rhs =
          hd_n.on_y[e] * s.u.u2[e] -
          dt * (conv_y[e] + gy[e] +
                stab_sum_y(stab, m, i, j) / m.yedge_dual_area(i, j));
      out.u.u2[e] = hnew <= dry ? 0.0 : rhs / hnew;
    }
  if (bad) throw SolverError("momentum update: empty dual cell");

  apply_boundary_velocity(out, m, cfg.boundary ? &cfg.boundary : nullptr,
                          out.time);
  return out;
}

State euler_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                 double dt, StepStats* stats, FluxSet* keep_flux) {
  StepStats local;
  State out = advance_substep(s, m, cfg, dt, PressureCoupling::Updated,
                              stats ? &local : nullptr, keep_flux);
  if (stats) stats->merge_weighted(local, 1.0);
  return out;
}

State heun_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                double dt, StepStats* stats) {
  StepStats s1, s2;
  const State hat = advance_substep(s, m, cfg, dt, PressureCoupling::Input,
                                    stats ? &s1 : nullptr, nullptr);
  const State tilde = advance_substep(hat, m, cfg, dt, PressureCoupling::Input,
                                      stats ? &s2 : nullptr, nullptr);
  if (stats) {
    stats->merge_weighted(s1, 0.5);
    stats->merge_weighted(s2, 0.5);
  }

  State out;
  out.time = s.time + dt;
  out.h = ScalarField(m, ScalarRole::Height);
  const int nx = m.nx(), ny = m.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      out.h.v[c] = 0.5 * (s.h.v[c] + tilde.h.v[c]);
    }
  for (int j = 0; j < ny; ++j)  // serial floor pass, as in the stages
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const int c = m.cell_index(i, j);
      if (out.h.v[c] < cfg.h_floor) {
        if (stats) {
          ++stats->flooring_events;
          stats->floor_mass_added += m.cell_area(i, j) * (cfg.h_floor - out.h.v[c]);
        }
        out.h.v[c] = cfg.h_floor;
      }
    }

  const DualHeightField hd_n = dual_height(s.h, m);
  const DualHeightField hd_t = dual_height(tilde.h, m);
  const DualHeightField hd_np1 = dual_height(out.h, m);
  out.u = VelocityField(m);
  const double dry = 10.0 * cfg.h_floor;
  int bad = 0;
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (int j = 0; j < ny; ++j)
    for (int i = 1; i < nx; ++i) {
      if (!m.xedge_interior(i, j)) continue;
      const int e = m.xedge_index(i, j);
      const double hnew = hd_np1.on_x[e];
      if (hnew <= 0.0) {
        bad |= 1;
        continue;
      }
      const double rhs =
          0.5 * (hd_n.on_x[e] * s.u.u1[e] + hd_t.on_x[e] * tilde.u.u1[e]);
      out.u.u1[e] = hnew <= dry ? 0.0 : rhs / hnew;
    }
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.yedge_interior(i, j)) continue;
      const int e = m.yedge_index(i, j);
      const double hnew = hd_np1.on_y[e];
      if (hnew <= 0.0) {
        bad |= 1;
        continue;
      }
      const double rhs =
          0.5 * (hd_n.on_y[e] * s.u.u2[e] + hd_t.on_y[e] * tilde.u.u2[e]);
      out.u.u2[e] = hnew <= dry ? 0.0 : rhs / hnew;
    }
  if (bad) throw SolverError("heun average: empty dual cell");
  apply_boundary_velocity(out, m, cfg.boundary ? &cfg.boundary : nullptr,
                          out.time);
  return out;
}

double cfl_dt(const State& s, const MacMesh& m, double fraction) {
  const int nx = m.nx(), ny = m.ny();
  double dt = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const double budget =
          m.xedge_length(j) * (std::abs(s.u.u1[m.xedge_index(i, j)]) +
                               std::abs(s.u.u1[m.xedge_index(i + 1, j)])) +
          m.yedge_length(i) * (std::abs(s.u.u2[m.yedge_index(i, j)]) +
                               std::abs(s.u.u2[m.yedge_index(i, j + 1)]));
      if (budget > 0.0)
        dt = std::min(dt, fraction * m.cell_area(i, j) / (2.0 * budget));
    }
  return dt;
}

bool heun_cfl_ok(const VelocityField& u_hat, const MacMesh& m, double dt) {
  const int nx = m.nx(), ny = m.ny();
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!m.active(i, j)) continue;
      const double budget =
          m.xedge_length(j) * (std::abs(u_hat.u1[m.xedge_index(i, j)]) +
                               std::abs(u_hat.u1[m.xedge_index(i + 1, j)])) +
          m.yedge_length(i) * (std::abs(u_hat.u2[m.yedge_index(i, j)]) +
                               std::abs(u_hat.u2[m.yedge_index(i, j + 1)]));
      if (2.0 * dt * budget > m.cell_area(i, j)) return false;
    }
  return true;
}

namespace {

bool all_finite(const State& s) {
  for (double v : s.h.v)
    if (!std::isfinite(v)) return false;
  for (double v : s.u.u1)
    if (!std::isfinite(v)) return false;
  for (double v : s.u.u2)
    if (!std::isfinite(v)) return false;
  return true;
}

double total_mass(const ScalarField& h, const MacMesh& m) {
  double sum = 0.0;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.active(i, j)) sum += m.cell_area(i, j) * h.v[m.cell_index(i, j)];
  return sum;
}

}  // namespace

RunResult run(State s, const MacMesh& m, const SchemeConfig& cfg, double T,
              const std::vector<Observer>& observers, bool track_bv) {
  RunResult res;
  apply_boundary_velocity(s, m, cfg.boundary ? &cfg.boundary : nullptr, s.time);
  const double t_end = s.time + T;
  long step = 0;
  res.monitor.time.push_back(s.time);
  res.monitor.mass.push_back(total_mass(s.h, m));

  while (s.time < t_end) {
    double dt = cfg.dt_policy.dt;
    if (cfg.dt_policy.kind == DtPolicy::CflFraction) {
      dt = std::min(cfg.dt_policy.dt, cfl_dt(s, m, cfg.dt_policy.fraction));
      if (!std::isfinite(dt) || dt <= 0.0)
        throw SolverError("run: dt policy produced no usable time step");
    }
    if (dt <= 0.0) throw SolverError("run: nonpositive time step");
    if (s.time + dt > t_end) dt = t_end - s.time;  // clip the last step

    StepStats stats;
    State next = cfg.kind == SchemeKind::HeunMuscl
                     ? heun_step(s, m, cfg, dt, &stats)
                     : euler_step(s, m, cfg, dt, &stats);
    ++step;
    if (!all_finite(next))
      throw SolverError("run: non-finite field after step " + std::to_string(step));

    if (track_bv) {
      double bh = 0.0, bu = 0.0;
      for (int j = 0; j < m.ny(); ++j)
        for (int i = 0; i < m.nx(); ++i)
          if (m.active(i, j)) {
            const int c = m.cell_index(i, j);
            bh += m.cell_area(i, j) * std::abs(next.h.v[c] - s.h.v[c]);
          }
      for (int j = 0; j < m.ny(); ++j)
        for (int i = 1; i < m.nx(); ++i)
          if (m.xedge_interior(i, j)) {
            const int e = m.xedge_index(i, j);
            bu += m.xedge_dual_area(i, j) * std::abs(next.u.u1[e] - s.u.u1[e]);
          }
      for (int j = 1; j < m.ny(); ++j)
        for (int i = 0; i < m.nx(); ++i)
          if (m.yedge_interior(i, j)) {
            const int e = m.yedge_index(i, j);
            bu += m.yedge_dual_area(i, j) * std::abs(next.u.u2[e] - s.u.u2[e]);
          }
      res.monitor.bv_h += bh;
      res.monitor.bv_u += bu;
    }

    s = std::move(next);
    res.monitor.time.push_back(s.time);
    res.monitor.mass.push_back(total_mass(s.h, m));
    res.monitor.outflux_dt.push_back(stats.boundary_outflux_dt);
    res.monitor.floor_added.push_back(stats.floor_mass_added);
    res.monitor.floorings.push_back(stats.flooring_events);
    res.monitor.flooring_events += stats.flooring_events;
    for (const Observer& ob : observers) ob(step, s, stats);
  }
  res.state = std::move(s);
  res.steps = step;
  return res;
}

}  // namespace swe
