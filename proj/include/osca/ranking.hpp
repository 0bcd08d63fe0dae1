#pragma once

#include <vector>

#include "osca/model.hpp"

namespace osca {

/// (discr, compl) coordinates of a complete solution.
std::pair<double, double> score(const SolutionCandidate& s);

/// Indices of the Pareto-minimal solutions under (discr, compl)
/// minimization: the rectangle each forms with the origin contains no other
/// solution. Throws on an empty input.
std::vector<std::size_t> minimal_set(const std::vector<SolutionCandidate>& solutions);

/// Star classification of a canonical integer loading matrix. Blocks are the
/// supports of single-signed columns; a starred type requires them to
/// partition all p variables. Type A has one block; B has several with every
/// contrast confined to one block; C has several without that confinement.
/// Two stars when block columns take a single value and contrasts exactly
/// two.
StarRating star_rating(const std::vector<IntVec>& columns, int p);

/// Total order: two star, one star, unstarred-minimal, rest; within a class,
/// repeatedly extract the class-local minimal set ordered by compl with
/// discr breaking ties. Assigns 1-based ranks and returns the solutions in
/// rank order.
std::vector<SolutionCandidate> total_order(std::vector<SolutionCandidate> solutions);

}  // namespace osca
