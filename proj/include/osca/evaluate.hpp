#pragma once

#include <optional>

#include "osca/linalg.hpp"
#include "osca/model.hpp"

namespace osca {

/// The source matrix used for diagnostics: the input matrix when available,
/// or Q diag(lambda) Q^T reconstructed from an eigen-only input with k = p.
/// Empty when diagnostics are unavailable (eigen-only with k < p).
std::optional<Mat> diagnostics_matrix(const EigenInput& input);

/// Percentage of total variance carried by each axis:
/// 100 (z^T S z / |z|^2) / trace(S). For a complete orthogonal set the
/// percentages sum to 100.
std::optional<Vec> variance_explained(const EigenInput& input, const SolutionCandidate& s);

/// Correlations between the simple components: z_i^T S z_j normalized by the
/// component standard deviations. Unit diagonal.
std::optional<Mat> component_correlations(const EigenInput& input, const SolutionCandidate& s);

}  // namespace osca
