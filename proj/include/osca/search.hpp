#pragma once

#include <optional>
#include <vector>

#include "osca/core.hpp"
#include "osca/model.hpp"

namespace osca {

/// Exact rational projector H = h_tilde / n onto the orthogonal complement of
/// the r axes absorbed so far. Invariants: h_tilde^2 == n * h_tilde and
/// trace(h_tilde) == n * (p - r), both in exact integer arithmetic.
struct IntegerProjector {
    std::vector<Int128> h;  // p x p, row-major
    Int128 n = 1;
    int p = 0;
    int r = 0;

    Int128 at(int i, int j) const { return h[static_cast<std::size_t>(i) * p + j]; }
    Int128& at(int i, int j) { return h[static_cast<std::size_t>(i) * p + j]; }

    /// Exact test that z lies in the null space of the absorbed axes,
    /// i.e. h_tilde * z == n * z.
    bool in_null_space(const IntVec& z) const;

    /// h_tilde * z in exact arithmetic.
    std::vector<Int128> apply_int(const IntVec& z) const;

    /// H * q in floating point.
    Vec apply(const Vec& q) const;
};

IntegerProjector projector_init(int p);

/// Absorbs one axis: h' = [|z|^2 h - n z z^T] / g with g the hcf of the
/// bracketed entries together with n |z|^2. Throws if z is not exactly
/// orthogonal to the axes already absorbed, or on 128-bit overflow.
IntegerProjector projector_absorb(const IntegerProjector& h, const IntVec& z);

/// omega(z) = accu(z, Hz), the closeness of the axis of z to the null space;
/// 1 exactly when the orthogonality conditions are met. Empty when Hz = 0
/// (the axis is fully removed by the projection).
std::optional<double> omega(const IntVec& z, const IntegerProjector& h);

enum class StageVariant { Hungry, AccuracyRetaining };

/// The three-stage iterative search based on convergence to orthogonality.
/// Starts from the N-ratio simplification of q_perp = H q_r, repairs
/// orthogonality through neighbor moves, and increments N up to n_star.
/// Returns an axis that is exactly orthogonal to the absorbed axes with
/// accuracy strictly above cos_theta, or nothing.
std::optional<IntegerAxis> stage_search(const Vec& q_perp, const IntegerProjector& h,
                                        double cos_theta, StageVariant variant,
                                        std::int64_t n_star);

/// Integer basis of the null space of Z_{r-1}^T built from the cofactor
/// matrix of the lexicographically first nonsingular row block.
struct OrthoBasis {
    int p = 0;
    int m = 0;                   // p - r + 1 columns
    std::vector<Int128> o;       // p x m, row-major, rows in original order
    std::vector<int> row_permutation;  // sorted position -> original row
    Int128 det_za = 1;

    Int128 at(int i, int j) const { return o[static_cast<std::size_t>(i) * m + j]; }
    Int128& at(int i, int j) { return o[static_cast<std::size_t>(i) * m + j]; }
};

/// Builds O_{r-1}. Rows are ordered by increasing |q_perp| before choosing
/// the pivot block, so the free block lines up with the elements contributing
/// most to angle accuracy. Throws on rank deficiency or overflow.
OrthoBasis ortho_basis(const std::vector<IntVec>& z_prev, const Vec& q_perp);

/// Search restricted to exactly orthogonal axes of the form O y: N-ratio
/// candidates for y* = (O^T O)^{-1} O^T q_r and their neighbors for all
/// N <= n_star, mapped through O and ranked by minimal complexity then
/// accuracy. Returns nothing when no candidate meets cos_theta.
std::optional<IntegerAxis> exact_ortho_search(const Vec& q_r, const std::vector<IntVec>& z_prev,
                                              double cos_theta, std::int64_t n_star);

/// Hybrid combiner: best of the two stage-search variants and the exact
/// orthogonality search, ranked first by the smallest complexity found, then
/// by accuracy, then by canonical lexicographic order.
std::optional<IntegerAxis> best_simple_axis(const Vec& q_r, const std::vector<IntVec>& z_prev,
                                            const IntegerProjector& h, double cos_theta,
                                            std::int64_t n_star);

/// The unique simple axis orthogonal to p-1 independent integer axes.
IntegerAxis forced_last_axis(const std::vector<IntVec>& z_prev);

/// Exhaustive enumeration of the cone: the literal best theta-accurate simple
/// approximation, for small instances only (p <= 6, n_cap <= 9).
std::optional<IntegerAxis> oracle_best_axis(const Vec& q_r, const std::vector<IntVec>& z_prev,
                                            double cos_theta, std::int64_t n_cap);

}  // namespace osca
