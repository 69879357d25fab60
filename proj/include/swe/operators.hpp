#pragma once

#include <vector>

#include "swe/boundary.hpp"
#include "swe/fields.hpp"
#include "swe/mesh.hpp"
#include "swe/reconstruct.hpp"

namespace swe {

// All discrete fluxes of one time level.  Primal mass fluxes are the scalar
// component along the edge normal (F_sigma = h_sigma u_sigma e^(i)); dual
// fluxes come in two families per orientation: "par" lives inside a primal
// cell (one entry per cell), "perp" on the grid-line lattice
// (nx+1) x (ny+1).  The reconstructed dual-interface velocities are kept so
// diagnostics can re-assemble the balances the scheme used.
struct FluxSet {
  std::vector<double> f1, f2;            // primal mass flux per X / Y edge
  std::vector<double> h1, h2;            // interface heights h_sigma
  std::vector<double> fx_par, fx_perp;   // X dual mesh mass fluxes
  std::vector<double> fy_par, fy_perp;   // Y dual mesh mass fluxes
  std::vector<double> ux_par, ux_perp;   // u1 at X dual edges
  std::vector<double> uy_par, uy_perp;   // u2 at Y dual edges

  void resize(const MacMesh& m);
};

// Conservative stabilization fluxes per dual edge (zeta * h_eps * delta_eps *
// (u_a - u_b), a the lower-index dual cell); zero unless both dual cells are
// evolved unknowns.
struct StabFlux {
  std::vector<double> x_par, x_perp, y_par, y_perp;
  bool enabled = false;
};

// F_sigma = h_sigma u_sigma on interior edges; on domain-wall edges the flux
// vanishes unless Dirichlet data is given, in which case the upwind height is
// the ghost sample for inflow and the adjacent cell value for outflow.
void assemble_mass_fluxes(const ScalarField& h, const VelocityField& u,
                          const MacMesh& m, const LimiterConfig& lim,
                          const BoundaryData* bc, FluxSet& flux);

// Dual mass fluxes from the primal ones: half-sum in the parallel case,
// measure-weighted halves of tau/tau2 in the perpendicular case.
void assemble_dual_fluxes(const MacMesh& m, FluxSet& flux);

ScalarField div_cell(const FluxSet& flux, const MacMesh& m);

// Divergence of the velocity alone, (1/|K|) sum |sigma| u.n (diagnostics).
ScalarField div_velocity(const VelocityField& u, const MacMesh& m);

// d_sigma xi = (|sigma|/|D_sigma|)(xi_L - xi_K) on interior edges, 0 elsewhere.
void edge_derivative(const ScalarField& xi, const MacMesh& m,
                     std::vector<double>& on_x, std::vector<double>& on_y);

// Same discrete derivative applied to bathymetry point samples z(x_K).
void bathy_gradient(const ScalarField& z, const MacMesh& m,
                    std::vector<double>& on_x, std::vector<double>& on_y);

// h_{sigma,c} = (h_K + h_L)/2 on interior edges (well-balanced face height).
void centered_edge_height(const ScalarField& h, const MacMesh& m,
                          std::vector<double>& on_x, std::vector<double>& on_y);

// div_{D_sigma}(h u_i u) per edge, from the dual fluxes and reconstructed
// dual-interface velocities stored in flux.  Interior edges only.
void momentum_divergence(const FluxSet& flux, const MacMesh& m,
                         std::vector<double>& on_x, std::vector<double>& on_y);

void stabilization_flux(const DualHeightField& hd, const VelocityField& u,
                        const MacMesh& m, double zeta, StabFlux& stab);

// Net stabilization flux sum for one dual cell (before the 1/|D_sigma|).
double stab_sum_x(const StabFlux& s, const MacMesh& m, int i, int j);
double stab_sum_y(const StabFlux& s, const MacMesh& m, int i, int j);

// F_{D_sigma}(h, u_i) = div_{D_sigma}(h u_i u) + g h_{sigma,c} (d_sigma h +
// d_sigma z): the explicit momentum flux of the Heun stages.
void total_momentum_flux(const ScalarField& h, const VelocityField& u,
                         const ScalarField& z, const MacMesh& m,
                         const LimiterConfig& lim, double g,
                         const BoundaryData* bc, std::vector<double>& on_x,
                         std::vector<double>& on_y);

}  // namespace swe
