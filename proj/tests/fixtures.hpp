#pragma once

#include <cmath>

#include <vector>

#include "osca/model.hpp"

namespace fixtures {

// Blood flow covariance study: published 2-dp loadings and variance
// percentages for the four resistance-index measurements.
inline osca::EigenInput blood() {
    osca::Mat q(4, 4);
    const double vals[4][4] = {
        {0.42, -0.32, -0.58, -0.62},
        {0.43, 0.30, -0.55, 0.65},
        {0.55, -0.65, 0.43, 0.30},
        {0.58, 0.63, 0.42, -0.31},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.at(i, j) = vals[i][j];
    return osca::EigenInput::make(std::move(q), {58.0, 25.9, 9.5, 6.5}, std::nullopt,
                                  osca::SourceKind::EigenOnly, 2.5e-2,
                                  {"right.doppler", "left.doppler", "right.cvi", "left.cvi"});
}

// Exams correlation study: 2-dp loadings for the five test scores.
inline osca::EigenInput exams() {
    osca::Mat q(5, 5);
    const double vals[5][5] = {
        {0.40, -0.65, 0.62, 0.15, -0.13},
        {0.43, -0.44, -0.71, -0.30, -0.18},
        {0.50, 0.13, -0.04, 0.11, 0.85},
        {0.46, 0.39, -0.14, 0.67, -0.42},
        {0.40, 0.47, 0.31, -0.66, -0.23},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) q.at(i, j) = vals[i][j];
    return osca::EigenInput::make(std::move(q), {63.6, 14.8, 8.9, 7.8, 4.9}, std::nullopt,
                                  osca::SourceKind::EigenOnly, 2.5e-2,
                                  {"mechanics", "vectors", "algebra", "analysis", "statistics"});
}

// Reflexes study: left/right reflexes for five parts of the body, p = k = 10.
inline osca::EigenInput reflexes() {
    const double vals[10][10] = {
        {0.35, -0.18, 0.18, 0.49, -0.27, -0.06, -0.05, 0.00, 0.10, 0.69},
        {0.36, -0.19, 0.15, 0.47, -0.27, -0.02, -0.13, 0.01, -0.13, -0.70},
        {0.36, -0.13, -0.14, 0.04, 0.71, -0.50, -0.22, -0.03, -0.19, 0.04},
        {0.39, -0.14, -0.09, 0.05, 0.41, 0.70, 0.35, 0.02, 0.19, -0.03},
        {0.34, -0.24, 0.14, -0.51, -0.16, -0.21, -0.13, -0.01, 0.67, -0.10},
        {0.34, -0.22, 0.17, -0.52, -0.23, 0.11, 0.08, 0.03, -0.67, 0.12},
        {0.30, 0.29, -0.50, 0.02, -0.24, -0.35, 0.62, -0.02, 0.01, -0.04},
        {0.27, 0.35, -0.54, -0.07, -0.18, 0.28, -0.63, 0.02, -0.02, 0.06},
        {0.20, 0.53, 0.41, -0.03, 0.07, 0.03, 0.00, -0.71, -0.01, -0.02},
        {0.19, 0.54, 0.40, -0.02, 0.10, -0.04, 0.01, 0.70, 0.03, -0.01}};
    osca::Mat q(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) q.at(i, j) = vals[i][j];
    return osca::EigenInput::make(
        std::move(q), {52.23, 20.36, 10.94, 8.57, 4.96, 1.08, 0.86, 0.59, 0.23, 0.19},
        std::nullopt, osca::SourceKind::EigenOnly, 2.5e-2,
        {"triceps.r", "triceps.l", "biceps.r", "biceps.l", "wrist.r", "wrist.l", "knee.r",
         "knee.l", "ankle.r", "ankle.l"});
}

// Winged-aphid anatomy study: 19 measurements, the k = 4 dominant components
// of the correlation matrix.
inline osca::EigenInput adelges() {
    const double vals[19][4] = {
        {0.25, 0.03, 0.02, 0.07},   {0.26, 0.07, 0.01, 0.10},  {0.26, 0.03, -0.05, 0.07},
        {0.26, 0.09, 0.03, 0.00},   {0.24, -0.18, 0.04, -0.01}, {0.25, -0.16, 0.00, 0.02},
        {0.23, 0.24, 0.05, 0.11},   {0.24, 0.04, 0.16, 0.01},  {0.25, -0.03, 0.10, -0.02},
        {0.26, 0.01, 0.03, 0.18},   {0.26, 0.03, 0.08, 0.20},  {0.26, 0.07, 0.12, 0.19},
        {0.25, -0.01, 0.07, 0.04},  {0.20, -0.40, -0.02, 0.06}, {0.16, -0.41, -0.19, -0.62},
        {0.11, -0.55, -0.15, 0.04}, {-0.19, -0.35, 0.04, 0.49}, {-0.13, -0.20, 0.93, -0.17},
        {0.20, 0.28, 0.05, -0.45}};
    osca::Mat q(19, 4);
    for (int i = 0; i < 19; ++i)
        for (int j = 0; j < 4; ++j) q.at(i, j) = vals[i][j];
    return osca::EigenInput::make(std::move(q), {73.0, 12.5, 3.9, 2.6}, std::nullopt,
                                  osca::SourceKind::EigenOnly, 2.5e-2);
}

inline osca::SolutionCandidate solution_from_columns(const std::vector<osca::IntVec>& cols,
                                                     const osca::EigenInput& input) {
    osca::SolutionCandidate s;
    for (std::size_t r = 0; r < cols.size(); ++r) {
        osca::IntegerAxis ax = osca::canonicalize_axis(cols[r]);
        ax.target_index = static_cast<int>(r) + 1;
        double num = 0.0, qq = 0.0, zz = 0.0;
        for (int i = 0; i < input.p; ++i) {
            double qi = input.vectors.at(i, static_cast<int>(r));
            double zi = static_cast<double>(ax.z[static_cast<std::size_t>(i)]);
            num += qi * zi;
            qq += qi * qi;
            zz += zi * zi;
        }
        ax.accuracy = std::abs(num) / std::sqrt(qq * zz);
        s.axes.push_back(std::move(ax));
    }
    s.refresh_scores();
    return s;
}

}  // namespace fixtures
