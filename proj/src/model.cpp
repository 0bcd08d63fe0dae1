#include "osca/model.hpp"

#include <algorithm>
#include <cmath>

namespace osca {

std::string order_name(Order o) {
    switch (o) {
        case Order::F: return "F";
        case Order::B: return "B";
        case Order::NF: return "NF";
        case Order::NB: return "NB";
    }
    return "?";
}

std::optional<Order> order_from_name(const std::string& s) {
    if (s == "F") return Order::F;
    if (s == "B") return Order::B;
    if (s == "NF") return Order::NF;
    if (s == "NB") return Order::NB;
    return std::nullopt;
}

EigenInput EigenInput::make(Mat vectors, Vec eigenvalues, std::optional<Mat> source,
                            SourceKind kind, double tol_unit, std::vector<std::string> names,
                            double tol_orth) {
    if (tol_orth < 0.0) tol_orth = 2.0 * tol_unit;
    EigenInput in;
    in.p = vectors.rows;
    in.k = vectors.cols;
    if (in.p < 1 || in.k < 1 || in.k > in.p)
        throw ValidationError("EigenInput: need 1 <= k <= p");
    if (static_cast<int>(eigenvalues.size()) != in.k)
        throw ValidationError("EigenInput: eigenvalue count != k");
    // Decreasing, with exact ties admitted: degenerate spectra (identity
    // source) still form a valid instance, the eigensolver's tie order making
    // the axes deterministic.
    for (int r = 1; r < in.k; ++r)
        if (eigenvalues[static_cast<std::size_t>(r - 1)] < eigenvalues[static_cast<std::size_t>(r)])
            throw ValidationError("EigenInput: eigenvalues not decreasing");
    for (int r = 0; r < in.k; ++r) {
        double n = norm(vectors.col(r));
        if (std::abs(n - 1.0) > tol_unit)
            throw ValidationError("EigenInput: column " + std::to_string(r + 1) + " is not unit length");
    }
    for (int r = 0; r < in.k; ++r)
        for (int s = r + 1; s < in.k; ++s)
            if (std::abs(dot(vectors.col(r), vectors.col(s))) > tol_orth)
                throw ValidationError("EigenInput: columns " + std::to_string(r + 1) + "," +
                                      std::to_string(s + 1) + " are not orthogonal");

    // Deterministic representative of each eigenaxis: unit length, largest
    // magnitude element positive (ties to the lowest index).
    for (int j = 0; j < in.k; ++j) {
        Vec c = vectors.col(j);
        double n = norm(c);
        int best = 0;
        double best_abs = -1.0;
        for (int i = 0; i < in.p; ++i) {
            double a = std::abs(c[static_cast<std::size_t>(i)]);
            if (a > best_abs + 1e-14) {
                best_abs = a;
                best = i;
            }
        }
        double flip = (c[static_cast<std::size_t>(best)] < 0.0) ? -1.0 : 1.0;
        for (auto& v : c) v *= flip / n;
        vectors.set_col(j, c);
    }

    in.vectors = std::move(vectors);
    in.eigenvalues = std::move(eigenvalues);
    in.source = std::move(source);
    in.source_kind = kind;
    if (names.empty()) {
        for (int i = 1; i <= in.p; ++i) names.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != in.p)
        throw ValidationError("EigenInput: variable name count != p");
    in.variable_names = std::move(names);
    return in;
}

void Tuning::validate() const {
    if (n_star < 1) throw ValidationError("Tuning: n_star must be >= 1");
    if (!(theta_star > 0.0 && theta_star <= 0.78539816339744830962 + 1e-12))
        throw ValidationError("Tuning: theta_star must be in (0, pi/4]");
    if (!(epsilon > 0.0 && epsilon < 1.0 - std::cos(theta_star)))
        throw ValidationError("Tuning: epsilon must be in (0, 1 - cos(theta_star))");
    if (orders.empty()) throw ValidationError("Tuning: no approximation orders selected");
}

IntegerAxis canonicalize_axis(const IntVec& z) {
    if (is_zero(z)) throw ValidationError("canonicalize_axis: zero vector");
    IntegerAxis axis;
    axis.z = z;
    std::int64_t g = hcf(axis.z);
    for (auto& e : axis.z) e /= g;
    for (auto e : axis.z) {
        if (e != 0) {
            if (e < 0)
                for (auto& f : axis.z) f = -f;
            break;
        }
    }
    axis.complexity = 0;
    for (auto e : axis.z) axis.complexity = std::max(axis.complexity, std::abs(e));
    axis.sq_norm = sq_norm_i64(axis.z);
    return axis;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void SolutionCandidate::refresh_scores() {
    ma = 1.0;
    n_max = 0;
    Int128 ssq = 0;
    for (const auto& ax : axes) {
        ma = std::min(ma, ax.accuracy);
        n_max = std::max(n_max, ax.complexity);
        ssq += ax.sq_norm;
    }
    discr = 1.0 - ma;
    const double pk = static_cast<double>(p()) * static_cast<double>(k());
    lambda_term = std::sqrt(static_cast<double>(ssq) / pk) / (2.0 * static_cast<double>(n_max));
    compl_score = static_cast<double>(n_max) + lambda_term;
}

IntVec SolutionCandidate::canonical_key() const {
    IntVec key;
    key.reserve(static_cast<std::size_t>(p()) * static_cast<std::size_t>(k()));
    for (const auto& ax : axes) key.insert(key.end(), ax.z.begin(), ax.z.end());
    return key;
}

bool solutions_equivalent(const SolutionCandidate& a, const SolutionCandidate& b) {
    if (a.p() != b.p() || a.k() != b.k())
        throw ValidationError("solutions_equivalent: dimension mismatch");
    return a.canonical_key() == b.canonical_key();
}

}  // namespace osca
