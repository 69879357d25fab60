#include "swe/cases.hpp"

#include <algorithm>
#include <stdexcept>

namespace swe {

// ---------------------------------------------------------------------------
// Travelling vortex
// ---------------------------------------------------------------------------

namespace {
inline double vortex_f(double xi) {
  if (xi <= 0.0 || xi >= 1.0) return 0.0;
  const double w = 1.0 - xi;
  return 10.0 * xi * xi * w * w;
}
}  // namespace

double vortex_F(double xi) {
  // f^2 = 100 xi^4 (1-xi)^4 integrated term by term; constant above xi = 1.
  if (xi <= 0.0) return 0.0;
  if (xi >= 1.0) return 10.0 / 63.0;
  const double x5 = std::pow(xi, 5);
  return 100.0 * x5 *
         (1.0 / 5.0 +
          xi * (-2.0 / 3.0 + xi * (6.0 / 7.0 + xi * (-0.5 + xi / 9.0))));
}

FlowSample vortex_exact(double x, double y, double t, const VortexParams& p) {
  const double X = x - p.ax * t, Y = y - p.ay * t;
  const double xi = X * X + Y * Y;
  const double f = vortex_f(xi);
  FlowSample s;
  s.u1 = -f * Y + p.ax;
  s.u2 = f * X + p.ay;
  s.h = (vortex_F(xi) + p.c) / (2.0 * p.g);
  return s;
}

// ---------------------------------------------------------------------------
// Exact Riemann solver
// ---------------------------------------------------------------------------

namespace {

// Depth function phi_K(h): velocity jump across the wave connecting to state
// (h_K, u_K); rarefaction branch below h_K, shock branch above.
double phi(double h, double hk, double g) {
  if (h <= hk) return 2.0 * (std::sqrt(g * h) - std::sqrt(g * hk));
  return (h - hk) * std::sqrt(0.5 * g * (h + hk) / (h * hk));
}

double dphi(double h, double hk, double g) {
  if (h <= hk) return std::sqrt(g / h);
  const double a = 0.5 * g * (h + hk) / (h * hk);
  const double sq = std::sqrt(a);
  return sq + (h - hk) * (-0.5 * g / (h * h)) / (2.0 * sq);
}

}  // namespace

RiemannSolution solve_riemann(const RiemannProblem& prob) {
  const double g = prob.g, hl = prob.hl, hr = prob.hr, ul = prob.ul,
               ur = prob.ur;
  if (hl <= 0.0 || hr <= 0.0)
    throw std::invalid_argument("riemann: dry initial states not supported");
  const auto fun = [&](double h) {
    return phi(h, hl, g) + phi(h, hr, g) + ur - ul;
  };

  // f is increasing in h: bracket then Newton with bisection fallback.
  double lo = 1e-14, hi = std::max(hl, hr);
  while (fun(hi) < 0.0) hi *= 2.0;
  double h = 0.5 * (lo + hi);
  {
    // two-rarefaction guess
    const double cl = std::sqrt(g * hl), cr = std::sqrt(g * hr);
    const double c = 0.5 * (cl + cr) + 0.25 * (ul - ur);
    if (c > 0.0) h = std::clamp(c * c / g, lo, hi);
  }
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    const double f = fun(h);
    if (f > 0.0)
      hi = h;
    else
      lo = h;
    const double d = dphi(h, hl, g) + dphi(h, hr, g);
    double next = h - f / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - h) <= 1e-12 * std::max(1.0, h) && std::abs(f) < 1e-12) {
      h = next;
      converged = true;
      break;
    }
    h = next;
  }
  if (!converged && std::abs(fun(h)) > 1e-10)
    throw std::runtime_error("riemann: star-region iteration did not converge");

  RiemannSolution sol;
  sol.prob = prob;
  sol.h_star = h;
  sol.u_star = 0.5 * (ul + ur) + 0.5 * (phi(h, hr, g) - phi(h, hl, g));

  const double cl = std::sqrt(g * hl), cr = std::sqrt(g * hr),
               cs = std::sqrt(g * h);
  sol.left_rarefaction = h <= hl;
  if (sol.left_rarefaction) {
    sol.left_head = ul - cl;
    sol.left_tail = sol.u_star - cs;
  } else {
    const double s = (h * sol.u_star - hl * ul) / (h - hl);
    sol.left_head = sol.left_tail = s;
  }
  sol.right_rarefaction = h <= hr;
  if (sol.right_rarefaction) {
    sol.right_head = sol.u_star + cs;
    sol.right_tail = ur + cr;
  } else {
    const double s = (h * sol.u_star - hr * ur) / (h - hr);
    sol.right_head = sol.right_tail = s;
  }
  return sol;
}

FlowSample RiemannSolution::sample(double xi) const {
  const double g = prob.g;
  FlowSample s;
  s.u2 = 0.0;
  if (xi <= left_head) {
    s.h = prob.hl;
    s.u1 = prob.ul;
  } else if (left_rarefaction && xi < left_tail) {
    const double u = (prob.ul + 2.0 * std::sqrt(g * prob.hl) + 2.0 * xi) / 3.0;
    const double c = (prob.ul + 2.0 * std::sqrt(g * prob.hl) - xi) / 3.0;
    s.h = c * c / g;
    s.u1 = u;
  } else if (xi < right_head) {
    s.h = h_star;
    s.u1 = u_star;
  } else if (right_rarefaction && xi < right_tail) {
    const double u = (prob.ur - 2.0 * std::sqrt(g * prob.hr) + 2.0 * xi) / 3.0;
    const double c = (xi - prob.ur + 2.0 * std::sqrt(g * prob.hr)) / 3.0;
    s.h = c * c / g;
    s.u1 = u;
  } else {
    s.h = prob.hr;
    s.u1 = prob.ur;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rotating drop
// ---------------------------------------------------------------------------

double drop_bathymetry(double x, double y, const DropParams& p) {
  const double X = x - 0.5 * p.L, Y = y - 0.5 * p.L;
  return -p.h0 / (p.a * p.a) * (p.a * p.a - X * X - Y * Y);
}

FlowSample drop_exact(double x, double y, double t, const DropParams& p) {
  const double X = x - 0.5 * p.L, Y = y - 0.5 * p.L;
  const double w = p.omega();
  const double cwt = std::cos(w * t), swt = std::sin(w * t);
  const double hbar =
      p.eta * p.h0 / (p.a * p.a) * (2.0 * X * cwt + 2.0 * Y * swt - p.eta) -
      drop_bathymetry(x, y, p);
  FlowSample s;
  s.h = std::max(p.h_floor, hbar);
  s.u1 = -p.eta * w * swt;
  s.u2 = p.eta * w * cwt;
  return s;
}

// ---------------------------------------------------------------------------
// Case presets
// ---------------------------------------------------------------------------

CaseSpec vortex_case(double g) {
  CaseSpec c;
  c.name = "vortex";
  c.g = g;
  c.default_resolution = 64;
  c.make_mesh = [](int n) {
    return MacMesh::build_uniform(n, n, Rect{-1.2, -1.2, 2.0, 2.0});
  };
  VortexParams p;
  p.g = g;
  c.exact = [p](double x, double y, double t) { return vortex_exact(x, y, t, p); };
  c.dirichlet_exact = true;
  c.default_dt = [](const MacMesh& m) { return m.mesh_size() / 8.0; };
  c.default_T = 0.8;
  c.line_y = 0.0;
  return c;
}

CaseSpec riemann_case() {
  CaseSpec c;
  c.name = "riemann";
  c.g = 9.81;
  c.default_resolution = 200;
  c.make_mesh = [](int n) {
    return MacMesh::build_uniform(n, 1, Rect{0.0, 0.0, 1.0, 1.0 / n});
  };
  const auto sol = std::make_shared<RiemannSolution>(solve_riemann({}));
  c.exact = [sol](double x, double, double t) {
    if (t <= 0.0) {
      FlowSample s;
      s.h = x < 0.5 ? sol->prob.hl : sol->prob.hr;
      return s;
    }
    return sol->sample((x - 0.5) / t);
  };
  c.entropy_safe = true;
  c.default_dt = [](const MacMesh& m) { return m.dx(0) / 10.0; };
  c.default_T = 0.1;
  c.line_y = 0.0;
  return c;
}

CaseSpec circular_dambreak_case() {
  CaseSpec c;
  c.name = "circular-dam";
  c.g = 9.81;
  c.default_resolution = 200;
  c.make_mesh = [](int n) {
    return MacMesh::build_uniform(n, n, Rect{-20.0, -20.0, 20.0, 20.0});
  };
  c.init = [](const MacMesh& m, State& s) {
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i) {
        const double r2 = m.xc(i) * m.xc(i) + m.yc(j) * m.yc(j);
        s.h.v[m.cell_index(i, j)] = r2 < 2.5 * 2.5 ? 2.5 : 0.5;
      }
  };
  c.zeta_stab = 0.1;
  c.default_dt = [](const MacMesh& m) { return m.mesh_size() / 10.0; };
  c.default_T = 4.7;
  c.line_y = 0.0;
  return c;
}

CaseSpec partial_dambreak_case() {
  CaseSpec c;
  c.name = "partial-dam";
  c.g = 9.81;
  c.default_resolution = 250;
  c.make_mesh = [](int n) {
    const std::vector<Rect> walls = {Rect{95.0, 0.0, 105.0, 95.0},
                                     Rect{95.0, 170.0, 105.0, 200.0}};
    return MacMesh::build_masked(n, n, Rect{0.0, 0.0, 200.0, 200.0}, walls);
  };
  c.bathymetry = [](double x, double) {
    return x <= 100.0 ? 0.0 : 0.04 * (x - 100.0);
  };
  c.init = [](const MacMesh& m, State& s) {
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i) {
        if (!m.active(i, j)) continue;
        const double x = m.xc(i);
        s.h.v[m.cell_index(i, j)] = x <= 100.0 ? 10.0 : 5.0 - 0.04 * (x - 100.0);
      }
  };
  c.zeta_stab = 0.25;
  c.default_dt = [](const MacMesh& m) { return m.mesh_size() / 40.0; };
  c.default_T = 20.0;
  c.line_y = 130.0;
  return c;
}

CaseSpec paraboloid_drop_case() {
  CaseSpec c;
  c.name = "drop";
  DropParams p;
  c.g = p.g;
  c.default_resolution = 100;
  c.make_mesh = [p](int n) {
    return MacMesh::build_uniform(n, n, Rect{0.0, 0.0, p.L, p.L});
  };
  c.bathymetry = [p](double x, double y) { return drop_bathymetry(x, y, p); };
  c.exact = [p](double x, double y, double t) { return drop_exact(x, y, t, p); };
  c.h_floor = p.h_floor;
  c.default_dt = [](const MacMesh& m) { return m.mesh_size() / 16.0; };
  c.default_T = 6.0 * M_PI / p.omega();
  c.line_y = 0.5 * p.L;
  return c;
}

CaseSpec lake_at_rest_case() {
  CaseSpec c;
  c.name = "lake-at-rest";
  c.g = 9.81;
  c.default_resolution = 64;
  c.make_mesh = [](int n) {
    return MacMesh::build_uniform(n, n, Rect{0.0, 0.0, 1.0, 1.0});
  };
  c.bathymetry = [](double x, double y) {
    const double r2 = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
    return 0.3 * std::exp(-20.0 * r2);
  };
  const auto zfn = c.bathymetry;
  c.init = [zfn](const MacMesh& m, State& s) {
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i)
        s.h.v[m.cell_index(i, j)] = 1.0 - zfn(m.xc(i), m.yc(j));
  };
  c.default_dt = [](const MacMesh& m) { return m.mesh_size() / 16.0; };
  c.default_T = 1.0;
  c.line_y = 0.5;
  return c;
}

CaseSpec make_case(const std::string& name) {
  if (name == "vortex") return vortex_case();
  if (name == "riemann") return riemann_case();
  if (name == "circular-dam") return circular_dambreak_case();
  if (name == "partial-dam") return partial_dambreak_case();
  if (name == "drop") return paraboloid_drop_case();
  if (name == "lake-at-rest") return lake_at_rest_case();
  throw std::invalid_argument("unknown case: " + name);
}

std::vector<std::string> case_names() {
  return {"vortex", "riemann", "circular-dam", "partial-dam", "drop",
          "lake-at-rest"};
}

State initial_state(const CaseSpec& spec, const MacMesh& m) {
  State s;
  s.time = 0.0;
  s.h = ScalarField(m, ScalarRole::Height);
  s.u = VelocityField(m);
  if (spec.init) {
    spec.init(m, s);
  } else if (spec.exact) {
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i)
        if (m.active(i, j))
          s.h.v[m.cell_index(i, j)] = spec.exact(m.xc(i), m.yc(j), 0.0).h;
    for (int j = 0; j < m.ny(); ++j)
      for (int i = 1; i < m.nx(); ++i)
        if (m.xedge_interior(i, j))
          s.u.u1[m.xedge_index(i, j)] =
              spec.exact(m.xedge_x(i), m.xedge_y(j), 0.0).u1;
    for (int j = 1; j < m.ny(); ++j)
      for (int i = 0; i < m.nx(); ++i)
        if (m.yedge_interior(i, j))
          s.u.u2[m.yedge_index(i, j)] =
              spec.exact(m.yedge_x(i), m.yedge_y(j), 0.0).u2;
  }
  for (double& v : s.h.v) v = std::max(v, spec.h_floor);
  for (int j = 0; j < m.ny(); ++j)  // zero out inactive cells
    for (int i = 0; i < m.nx(); ++i)
      if (!m.active(i, j)) s.h.v[m.cell_index(i, j)] = 0.0;
  const BoundaryFn bc = spec.dirichlet_exact ? spec.exact : BoundaryFn{};
  apply_boundary_velocity(s, m, bc ? &bc : nullptr, 0.0);
  return s;
}

std::shared_ptr<ScalarField> sample_bathymetry(const CaseSpec& spec,
                                               const MacMesh& m) {
  if (!spec.bathymetry) return nullptr;
  auto z = std::make_shared<ScalarField>(m, ScalarRole::Bathymetry);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i)
      if (m.active(i, j))
        z->v[m.cell_index(i, j)] = spec.bathymetry(m.xc(i), m.yc(j));
  return z;
}

SchemeConfig scheme_config(const CaseSpec& spec, const MacMesh& m,
                           SchemeKind kind) {
  SchemeConfig cfg;
  cfg.kind = kind;
  cfg.g = spec.g;
  cfg.zeta_stab = spec.zeta_stab;
  cfg.h_floor = spec.h_floor;
  cfg.limiter.mode = LimiterMode::Muscl;
  cfg.limiter.entropy_safe = spec.entropy_safe;
  cfg.dt_policy = DtPolicy::fixed(spec.default_dt ? spec.default_dt(m) : 0.0);
  cfg.bathymetry = sample_bathymetry(spec, m);
  if (spec.dirichlet_exact) cfg.boundary = spec.exact;
  return cfg;
}

}  // namespace swe
