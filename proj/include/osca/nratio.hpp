#pragma once

#include <cstddef>

#include "osca/core.hpp"
#include "osca/model.hpp"

namespace osca {

/// Result of an N-ratio simplification, keeping the internal sorted-space
/// context so that the neighboring approximations can be generated.
struct NRatioResult {
    std::int64_t n = 1;           // the N used
    IntVec z_sorted;              // rounded entries in sorted-magnitude space, z_sorted[0] == n
    IntVec l_values;              // l_r per sorted position (l_values[0] unused)
    std::vector<int> perm;        // perm[sorted_pos] = original index
    std::vector<int> signs;       // per original index, +1 or -1
    std::size_t ops = 0;          // elementary operations, excluding the sort

    /// The rounded vector in original coordinates, before hcf division.
    IntVec raw() const;

    /// Canonical axis (hcf divided out, sign fixed).
    IntegerAxis axis() const { return canonicalize_axis(raw()); }
};

/// N-ratio simplification of a nonzero direction vector u at complexity N:
/// entries are rounded on arctangent midpoints after sign and rank
/// normalization. Ties in the magnitude sort break on the original index and
/// an exact midpoint takes the lower value.
NRatioResult nratio_simplify(const Vec& u, std::int64_t n);

/// The l-1 depth-one neighboring approximations: each flips one sorted entry
/// to the other member of {l_r, l_r + 1}, restoring permutation and signs.
/// Vectors are returned in original coordinates, before hcf division.
std::vector<IntVec> nratio_neighbors(const NRatioResult& r);

}  // namespace osca
