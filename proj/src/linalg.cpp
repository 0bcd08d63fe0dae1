#include "osca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace osca {

Mat mat_mul(const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            double xv = x.at(i, k);
            if (xv == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

double max_abs(const Mat& x) {
    double m = 0.0;
    for (double v : x.a) m = std::max(m, std::abs(v));
    return m;
}

SymMatrix::SymMatrix(Mat mat) : m(std::move(mat)) {
    if (m.rows != m.cols) throw ValidationError("SymMatrix: not square");
    double scale = std::max(1.0, max_abs(m));
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12 * scale)
                throw ValidationError("SymMatrix: not symmetric");
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
}

namespace {

void orient_column(Mat& v, int j) {
    int best = 0;
    double best_abs = -1.0;
    for (int i = 0; i < v.rows; ++i) {
        double a = std::abs(v.at(i, j));
        if (a > best_abs + 1e-14) {
            best_abs = a;
            best = i;
        }
    }
    if (v.at(best, j) < 0.0)
        for (int i = 0; i < v.rows; ++i) v.at(i, j) = -v.at(i, j);
}

}  // namespace

EigenDecomposition eigendecompose(const SymMatrix& s) {
    const int n = s.p();
    Mat a = s.m;
    Mat v = Mat::identity(n);

    const int max_sweeps = 64;
    const double scale = std::max(1.0, max_abs(a));
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (std::sqrt(off) <= 1e-15 * scale * n) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double app = a.at(p, p), aqq = a.at(q, q);
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - sn * akq;
                    a.at(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - sn * aqk;
                    a.at(q, k) = sn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - sn * vkq;
                    v.at(k, q) = sn * vkp + c * vkq;
                }
            }
    }
    {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (std::sqrt(off) > 1e-9 * scale * n)
            throw ValidationError("eigendecompose: Jacobi iteration did not converge");
    }

    for (int j = 0; j < n; ++j) orient_column(v, j);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        double li = a.at(i, i), lj = a.at(j, j);
        if (std::abs(li - lj) > 1e-12 * scale) return li > lj;
        // tied eigenvalues: deterministic order on first differing vector element
        for (int k = 0; k < n; ++k) {
            double d = v.at(k, i) - v.at(k, j);
            if (std::abs(d) > 1e-12) return d > 0.0;
        }
        return i < j;
    });

    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[static_cast<std::size_t>(j)] = a.at(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

Residual project_residual(const Vec& q, const std::vector<IntVec>& basis) {
    Vec r = q;
    for (const auto& z : basis) {
        double zz = 0.0;
        double rz = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            double zi = static_cast<double>(z[i]);
            zz += zi * zi;
            rz += r[i] * zi;
        }
        if (zz == 0.0) throw ValidationError("project_residual: zero basis vector");
        double f = rz / zz;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * static_cast<double>(z[i]);
    }
    double len = norm(r);
    return Residual{std::move(r), len};
}

}  // namespace osca
