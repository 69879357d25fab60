#pragma once

#include <utility>
#include <vector>

#include "swe/fields.hpp"
#include "swe/mesh.hpp"
#include "swe/operators.hpp"
#include "swe/schemes.hpp"

namespace swe {

struct EnergyReport {
  double kinetic_total = 0.0;    // sum |D_sigma| (1/2) h_D u^2
  double potential_total = 0.0;  // sum |K| ((1/2) g h^2 + g h z)
  double entropy_total = 0.0;
  double kinetic_residual_max = 0.0;
  double potential_residual_max = 0.0;
  double bv_time_h = 0.0, bv_time_u = 0.0;
  long flooring_events = 0;
};

EnergyReport energy_totals(const State& s, const MacMesh& m, double g,
                           const ScalarField* z);

// Per-entity assembly of a discrete balance: `defect` is the left-hand side of
// the identity, `remainder` its closed-form right-hand side; the two must sum
// to zero up to rounding.  max_mismatch is relative to the largest assembled
// term.
struct BalanceCheck {
  std::vector<double> defect_x, remainder_x;  // X edges (kinetic) or unused
  std::vector<double> defect_y, remainder_y;
  std::vector<double> defect_cell, remainder_cell;  // potential balance
  double max_mismatch = 0.0;
};

// Kinetic energy balance of one forward Euler step (not valid across a full
// Heun step; apply it per stage instead).  `flux` must be the FluxSet the step
// used; requires a flooring-free, wet step.
BalanceCheck kinetic_balance_residual(const State& s_n, const State& s_np1,
                                      const FluxSet& flux, const MacMesh& m,
                                      const SchemeConfig& cfg, double dt);

BalanceCheck potential_balance_residual(const State& s_n, const State& s_np1,
                                        const FluxSet& flux, const MacMesh& m,
                                        const SchemeConfig& cfg, double dt);

// |sum_K |K| xi_K div_K(h u) + sum_sigma |D_sigma| h_sigma u_sigma d_sigma xi|
// relative to the size of the two sums.
double check_div_grad_duality(const ScalarField& h, const VelocityField& u,
                              const ScalarField& xi, const MacMesh& m,
                              const LimiterConfig& lim);

// max_sigma |(|D|/dt)(h_D^{n+1}-h_D^n) + sum |eps| F_eps.n| / flux scale.
double check_dual_mass_balance(const State& s_n, const State& s_np1,
                               const FluxSet& flux, const MacMesh& m, double dt);

// Discrete L1 errors against an exact solution at the state's time; the
// velocity error runs over interior edges (the unknowns).
std::pair<double, double> l1_error(const State& s, const ExactFn& exact,
                                   const MacMesh& m);

// Orders between consecutive rows of (delta_M, error).
std::vector<double> convergence_order(
    const std::vector<std::pair<double, double>>& errors);

// Accumulated time-BV sums over a recorded trajectory.
std::pair<double, double> bv_time_norms(const std::vector<State>& trajectory,
                                        const MacMesh& m);

}  // namespace swe
