#pragma once

#include <vector>

#include "osca/core.hpp"

namespace osca {

/// Dense row-major matrix, small p only.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Vec col(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
        return v;
    }
    void set_col(int j, const Vec& v) {
        for (int i = 0; i < rows; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
double max_abs(const Mat& x);

/// Symmetric p x p matrix wrapper; validates symmetry on construction.
struct SymMatrix {
    Mat m;
    explicit SymMatrix(Mat mat);
    int p() const { return m.rows; }
    double trace() const;
};

struct EigenDecomposition {
    Vec values;   // descending
    Mat vectors;  // columns are the corresponding unit eigenvectors
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Eigenvalues are returned
/// in decreasing order; ties are ordered deterministically on the first
/// differing eigenvector element. Each eigenvector is oriented so that its
/// largest-magnitude element is positive.
EigenDecomposition eigendecompose(const SymMatrix& s);

struct Residual {
    Vec q_perp;
    double max_accuracy;  // the norm of q_perp
};

/// Orthogonal projection of q onto the complement of span(basis). The basis
/// vectors must be pairwise orthogonal, nonzero integer vectors.
Residual project_residual(const Vec& q, const std::vector<IntVec>& basis);

}  // namespace osca
