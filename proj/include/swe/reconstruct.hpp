#pragma once

#include <vector>

#include "swe/boundary.hpp"
#include "swe/fields.hpp"
#include "swe/mesh.hpp"

namespace swe {

struct FluxSet;  // operators.hpp

enum class LimiterMode { Upwind, Muscl };

// Which limited interpolation builds the interface value in muscl mode:
// Calif is the two-argument procedure with an affine edge prediction, VanLeer
// the three-slope minmod with zeta weights (1D/uniform form).
enum class MusclProcedure { Calif, VanLeer };

struct LimiterConfig {
  LimiterMode mode = LimiterMode::Muscl;
  MusclProcedure procedure = MusclProcedure::Calif;
  double zeta_plus = 1.0;
  double zeta_minus = 1.0;
  // Restrict the upwind-side convex weight to [1/2, 1] (entropy condition of
  // the first-order-in-time analysis); a no-op for Calif on uniform grids.
  bool entropy_safe = false;
};

double minmod2(double a, double b);
double minmod3(double a, double b, double c);

// Interface heights h_sigma on interior edges, upwinded w.r.t. the edge
// velocity.  Wall edges are left at 0 (mass flux assembly fills them when
// Dirichlet data is present).
void reconstruct_height(const ScalarField& h, const VelocityField& u,
                        const MacMesh& m, const LimiterConfig& lim,
                        std::vector<double>& h_on_x,
                        std::vector<double>& h_on_y);

// Dual-interface velocities u_{i,eps}, upwinded w.r.t. the dual mass fluxes
// already stored in flux; fills flux.ux_par/ux_perp/uy_par/uy_perp.
void reconstruct_velocity(const VelocityField& u, const MacMesh& m,
                          const LimiterConfig& lim, const BoundaryData* bc,
                          FluxSet& flux);

}  // namespace swe
