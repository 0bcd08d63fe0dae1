#pragma once

#include <cstdint>
#include <optional>

#include "osca/linalg.hpp"
#include "osca/model.hpp"

namespace osca {

/// Counter-based generator (splitmix64 over seed and counter): the same seed
/// always yields the same stream, and replication streams can be derived
/// without sharing state.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    explicit CounterRng(std::uint64_t s) : seed(s) {}

    std::uint64_t next_u64();
    double next_unit();    // uniform in (0, 1)
    double next_normal();  // standard normal via Box-Muller

private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Hadamard matrix of order p = 2^m, entries +-1, pairwise orthogonal
/// columns. Throws unless p is a power of two.
std::vector<IntVec> hadamard(int p);

struct SimulatedDataset {
    Mat data;      // n x p, n = 4p - 3
    Mat q_pop;     // p x p population eigenvectors (normalized Hadamard)
    Vec spectrum;  // (16, 8, 4, 2, 1/(p-4), ...)
};

/// Zero-mean normal draws with covariance Q_pop diag(spectrum) Q_pop^T.
/// Deterministic given the seed.
SimulatedDataset simulate_dataset(int p, std::uint64_t seed);

struct MinComplexity {
    std::int64_t n = 0;
    bool exact = false;  // false when only the N-ratio upper bound was used
};

/// Minimum complexity for a theta-accurate simple axis without orthogonality
/// restrictions: exact by enumeration for p <= 6, otherwise an upper bound
/// from the first qualifying N-ratio simplification. Empty when nothing with
/// N <= 9 qualifies (right-censored).
std::optional<MinComplexity> min_complexity_single_axis(const Vec& q, double cos_theta);

}  // namespace osca
