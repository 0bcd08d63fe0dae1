#include "osca/evaluate.hpp"

#include <cmath>

namespace osca {

std::optional<Mat> diagnostics_matrix(const EigenInput& input) {
    if (input.source) return input.source;
    if (input.k < input.p) return std::nullopt;
    Mat s(input.p, input.p);
    for (int i = 0; i < input.p; ++i)
        for (int j = 0; j < input.p; ++j) {
            double v = 0.0;
            for (int r = 0; r < input.k; ++r)
                v += input.eigenvalues[static_cast<std::size_t>(r)] * input.vectors.at(i, r) *
                     input.vectors.at(j, r);
            s.at(i, j) = v;
        }
    return s;
}

namespace {

double quad_form(const Mat& s, const IntVec& a, const IntVec& b) {
    double out = 0.0;
    for (int i = 0; i < s.rows; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        double row = 0.0;
        for (int j = 0; j < s.cols; ++j)
            row += s.at(i, j) * static_cast<double>(b[static_cast<std::size_t>(j)]);
        out += static_cast<double>(a[static_cast<std::size_t>(i)]) * row;
    }
    return out;
}

}  // namespace

std::optional<Vec> variance_explained(const EigenInput& input, const SolutionCandidate& s) {
    auto m = diagnostics_matrix(input);
    if (!m) return std::nullopt;
    double tr = 0.0;
    for (int i = 0; i < m->rows; ++i) tr += m->at(i, i);
    Vec out;
    out.reserve(s.axes.size());
    for (const auto& ax : s.axes) {
        double v = quad_form(*m, ax.z, ax.z) / static_cast<double>(ax.sq_norm);
        out.push_back(100.0 * v / tr);
    }
    return out;
}

std::optional<Mat> component_correlations(const EigenInput& input, const SolutionCandidate& s) {
    auto m = diagnostics_matrix(input);
    if (!m) return std::nullopt;
    const int k = s.k();
    Vec var(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        var[static_cast<std::size_t>(i)] = quad_form(*m, s.axes[static_cast<std::size_t>(i)].z,
                                                     s.axes[static_cast<std::size_t>(i)].z);
        if (!(var[static_cast<std::size_t>(i)] > 0.0))
            throw ValidationError("component_correlations: zero-variance component");
    }
    Mat corr(k, k);
    for (int i = 0; i < k; ++i) {
        corr.at(i, i) = 1.0;
        for (int j = i + 1; j < k; ++j) {
            double c = quad_form(*m, s.axes[static_cast<std::size_t>(i)].z,
                                 s.axes[static_cast<std::size_t>(j)].z) /
                       std::sqrt(var[static_cast<std::size_t>(i)] * var[static_cast<std::size_t>(j)]);
            corr.at(i, j) = c;
            corr.at(j, i) = c;
        }
    }
    return corr;
}

}  // namespace osca
