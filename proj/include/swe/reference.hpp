#pragma once

#include "swe/fields.hpp"
#include "swe/mesh.hpp"
#include "swe/schemes.hpp"

// Plain serial re-implementation of the time steps, written directly from the
// per-entity formulas with no shared staging.  Kept as the reference the
// OpenMP kernels are tested and benchmarked against.  Impermeable walls only
// (cfg.boundary is ignored).
namespace swe::ref {

State euler_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                 double dt);
State heun_step(const State& s, const MacMesh& m, const SchemeConfig& cfg,
                double dt);

}  // namespace swe::ref
