#pragma once

#include <vector>

#include "osca/model.hpp"
#include "osca/search.hpp"

namespace osca {

/// Next eigenaxis index (1-based) for the given approximation order. F and B
/// are static; NF/NB pick the remaining index with the largest maximum
/// achievable accuracy |q_r_perp| against the integer axes chosen so far,
/// ties broken by the smaller index.
int approximation_order_next(const EigenInput& input, Order order,
                             const std::vector<int>& chosen_targets,
                             const std::vector<IntVec>& chosen_axes);

/// Runs one order through the decreasing-theta schedule, harvesting every
/// complete solution. The schedule advances with cos(theta^[n+1]) equal to
/// the minimum accuracy attained among the sought axes and stops once that
/// reaches 1 - epsilon.
SweepRecord run_order(const EigenInput& input, const Tuning& tuning, Order order);

/// Union of the selected order runs, deduplicated by axis-equivalence with
/// provenance merged; axes are reported in eigenvalue order 1..k.
std::vector<SolutionCandidate> harvest(const EigenInput& input, const Tuning& tuning);

/// Worker cap from OSCA_THREADS (0 or unset = auto).
int worker_count();

}  // namespace osca
