#include "osca/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace osca {

namespace {

double accuracy_impl(double uv, double uu, double vv) {
    if (uu == 0.0 || vv == 0.0) throw ValidationError("accuracy: zero vector");
    double a = std::abs(uv) / std::sqrt(uu * vv);
    return std::min(a, 1.0);
}

}  // namespace

double accuracy(const Vec& u, const Vec& v) {
    return accuracy_impl(dot(u, v), dot(u, u), dot(v, v));
}

double accuracy(const Vec& u, const IntVec& v) {
    double uv = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double vi = static_cast<double>(v[i]);
        uv += u[i] * vi;
        vv += vi * vi;
    }
    return accuracy_impl(uv, dot(u, u), vv);
}

double accuracy(const IntVec& u, const IntVec& v) {
    double uv = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double a = static_cast<double>(u[i]);
        double b = static_cast<double>(v[i]);
        uv += a * b;
        uu += a * a;
        vv += b * b;
    }
    return accuracy_impl(uv, uu, vv);
}

double axis_distance_delta(const Vec& x, const Vec& y, double tol) {
    if (std::abs(norm(x) - 1.0) > tol || std::abs(norm(y) - 1.0) > tol)
        throw ValidationError("axis_distance_delta: inputs must be unit length");
    double c = std::abs(dot(x, y));
    return std::sqrt(std::max(0.0, 1.0 - std::min(c, 1.0)));
}

double set_distance_delta(const std::vector<Vec>& xs, const std::vector<Vec>& ys, double tol) {
    if (xs.size() != ys.size()) throw ValidationError("set_distance_delta: count mismatch");
    double d = 0.0;
    for (std::size_t r = 0; r < xs.size(); ++r)
        d = std::max(d, axis_distance_delta(xs[r], ys[r], tol));
    return d;
}

}  // namespace osca
