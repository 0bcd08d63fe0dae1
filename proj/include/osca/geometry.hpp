#pragma once

#include "osca/core.hpp"

namespace osca {

/// Angle accuracy between the axes spanned by u and v: |u.v| / (|u||v|).
/// Symmetric, scale and sign invariant; in [0, 1]. Throws on a zero vector.
double accuracy(const Vec& u, const Vec& v);
double accuracy(const Vec& u, const IntVec& v);
double accuracy(const IntVec& u, const IntVec& v);

/// Axis distance delta = sqrt(1 - |cos theta|) between unit vectors x and y.
/// Equals min(|x-y|, |x+y|)/sqrt(2). Throws if either is not unit length.
double axis_distance_delta(const Vec& x, const Vec& y, double tol = 1e-8);

/// Overall discrepancy Delta = max_r delta(x_r, y_r) between two equal-length
/// ordered sets of unit vectors. 1 - Delta^2 equals the minimum per-pair
/// accuracy.
double set_distance_delta(const std::vector<Vec>& xs, const std::vector<Vec>& ys,
                          double tol = 1e-8);

}  // namespace osca
