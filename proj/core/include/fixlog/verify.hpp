#pragma once

#include "fixlog/semantics.hpp"

namespace fixlog {

// Theorem-check harnesses beyond check_theorem1/check_prop2, shared by the
// CLI and the acceptance suite.  A failed check is a report outcome, not an
// exception.

// Definite programs only: at every iteration n up to stabilization, the fact
// heads of the unfolding ladder equal the tp_step ladder exactly.
CheckReport check_prop1(const GroundProgram& g);

// well_founded_model(g) equals fitting_model of the fixpoint completion.
CheckReport check_thm2_corollary(const GroundProgram& g);

// Every converging GL iteration (from empty, full, and seeded starts) ends
// in a stable model.
CheckReport check_thm5(const GroundProgram& g, int starts = 4, std::uint64_t seed = 0,
                       int iter_cap = 10'000,
                       std::uint64_t interp_cap = kDefaultInterpCap);

// For locally stratified programs: the fixpoint completion is locally
// hierarchical under the found levels, GL is strictly d_l-contracting over
// all interpretation pairs, and exactly one stable model exists.
// Not-applicable (with a witness cycle) when no stratification exists.
CheckReport check_thm6(const GroundProgram& g, std::uint64_t pair_cap = 1u << 24,
                       std::uint64_t interp_cap = kDefaultInterpCap);

// Total well-founded model required: level_from_fitting succeeds and GL is
// strictly contracting in the dislocated rho metric over all pairs.
// Not-applicable when the well-founded model is partial.
CheckReport check_thm7(const GroundProgram& g, std::uint64_t pair_cap = 1u << 24);

// For every interpretation I and atom a with GL(I)(a) false, the continuity
// witness search at bound |base| returns no-clause or a validated witness
// set, never exhausted.
CheckReport check_cor1(const GroundProgram& g,
                       std::uint64_t interp_cap = kDefaultInterpCap);

} // namespace fixlog
