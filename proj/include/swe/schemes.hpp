#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "swe/boundary.hpp"
#include "swe/fields.hpp"
#include "swe/mesh.hpp"
#include "swe/operators.hpp"

namespace swe {

enum class SchemeKind {
  EulerUpwind,  // segregated forward Euler, first-order upwind fluxes
  EulerMuscl,   // segregated forward Euler, MUSCL fluxes
  HeunMuscl,    // Heun (RK2) in time, MUSCL fluxes
};

struct DtPolicy {
  enum Kind { Fixed, CflFraction } kind = Fixed;
  double dt = 0.0;        // fixed step, and the cap for CflFraction
  double fraction = 0.5;  // of the positivity CFL budget

  static DtPolicy fixed(double dt) { return {Fixed, dt, 0.0}; }
  static DtPolicy cfl(double fraction, double dt_cap) {
    return {CflFraction, dt_cap, fraction};
  }
};

struct SchemeConfig {
  SchemeKind kind = SchemeKind::HeunMuscl;
  LimiterConfig limiter;
  double g = 9.81;
  double zeta_stab = 0.0;
  double h_floor = 1e-8;
  DtPolicy dt_policy;
  BoundaryFn boundary;  // optional Dirichlet wall data (exact solutions)
  std::shared_ptr<const ScalarField> bathymetry;  // null means flat bottom

  // The first-order scheme is the Euler one with upwind fluxes everywhere.
  LimiterConfig effective_limiter() const {
    LimiterConfig lc = limiter;
    if (kind == SchemeKind::EulerUpwind) lc.mode = LimiterMode::Upwind;
    return lc;
  }
};

struct StepStats {
  long flooring_events = 0;
  double floor_mass_added = 0.0;  // mass created by the h floor (weighted)
  double boundary_outflux_dt = 0.0;  // dt * sum over wall edges |sigma| F.n_out
  void merge_weighted(const StepStats& o, double w) {
    flooring_events += o.flooring_events;
    floor_mass_added += w * o.floor_mass_added;
    boundary_outflux_dt += w * o.boundary_outflux_dt;
  }
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// One segregated forward Euler step (mass first, then momentum with the
// updated pressure and face height).
State euler_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                 double dt, StepStats* stats = nullptr,
                 FluxSet* keep_flux = nullptr);

// One Heun step: two explicit stages and the conservative average.
State heun_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                double dt, StepStats* stats = nullptr);

// Shared explicit stage; Updated reproduces euler_step bit for bit, Input is
// the Heun stage (pressure and face height at the input time level).
enum class PressureCoupling { Updated, Input };
State advance_substep(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                      double dt, PressureCoupling pc, StepStats* stats,
                      FluxSet* keep_flux);

// Largest dt with 2 dt sum_{sigma in E(K)} |sigma||u.n| <= fraction |K| for
// every cell; +inf when the velocity vanishes.
double cfl_dt(const State& s, const MacMesh& m, double fraction);

// Heun positivity side condition evaluated on the predictor velocity.
bool heun_cfl_ok(const VelocityField& u_hat, const MacMesh& m, double dt);

struct Monitor {
  std::vector<double> time, mass, outflux_dt, floor_added;
  std::vector<long> floorings;
  double bv_h = 0.0, bv_u = 0.0;  // accumulated time-BV sums
  long flooring_events = 0;
};

using Observer = std::function<void(long step, const State& s, const StepStats&)>;

struct RunResult {
  State state;
  long steps = 0;
  Monitor monitor;
};

// March from s.time to time T (last step clipped); throws SolverError with the
// step index when a field stops being finite.
RunResult run(State s, const MacMesh& m, const SchemeConfig& cfg, double T,
              const std::vector<Observer>& observers = {},
              bool track_bv = true);

}  // namespace swe
