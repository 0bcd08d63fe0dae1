// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "osca/evaluate.hpp"
#include "osca/geometry.hpp"
#include "osca/io.hpp"
#include "osca/linalg.hpp"
#include "osca/ranking.hpp"
#include "osca/search.hpp"
#include "osca/sim.hpp"
#include "osca/sweep.hpp"

using namespace osca;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!pass) ++g_failures;
}

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        } else if (!cond) {
            why += "; " + what;
        }
    }
};

constexpr double kPi = 3.14159265358979323846;
const double kCos45 = std::cos(kPi / 4.0);

std::string data_path(const std::string& name) { return std::string(OSCA_DATA_DIR) + "/" + name; }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool axes_equal(const SolutionCandidate& s, const std::vector<IntVec>& cols) {
    if (s.axes.size() != cols.size()) return false;
    for (std::size_t r = 0; r < cols.size(); ++r)
        if (s.axes[r].z != canonicalize_axis(cols[r]).z) return false;
    return true;
}

// exact integer rank by fraction-free elimination
int int_rank(std::vector<IntVec> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][lead] == 0) continue;
            std::int64_t a = rows[r][lead], b = rows[i][lead];
            for (std::size_t c = 0; c < cols; ++c) rows[i][c] = rows[i][c] * a - rows[r][c] * b;
            std::int64_t g = hcf(rows[i]);
            if (g > 1)
                for (auto& e : rows[i]) e /= g;
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<IntVec> random_orthogonal_axes(int p, int count, std::mt19937_64& rng) {
    std::vector<IntVec> axes;
    IntegerProjector proj = projector_init(p);
    int attempts = 0;
    while (static_cast<int>(axes.size()) < count && ++attempts < 300) {
        IntVec v(static_cast<std::size_t>(p));
        for (auto& e : v) e = static_cast<std::int64_t>(rng() % 7) - 3;
        if (is_zero(v)) continue;
        std::vector<Int128> w;
        try {
            w = proj.apply_int(v);
        } catch (const OverflowError&) {
            continue;
        }
        IntVec z(static_cast<std::size_t>(p));
        bool ok = true, zero = true;
        for (int i = 0; i < p; ++i) {
            if (w[static_cast<std::size_t>(i)] > INT64_MAX / 4 || w[static_cast<std::size_t>(i)] < INT64_MIN / 4)
                ok = false;
            else
                z[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(w[static_cast<std::size_t>(i)]);
            if (z[static_cast<std::size_t>(i)] != 0) zero = false;
        }
        if (!ok || zero) continue;
        IntegerAxis ax = canonicalize_axis(z);
        if (ax.complexity > 4000) continue;
        try {
            proj = projector_absorb(proj, ax.z);
        } catch (const OverflowError&) {
            continue;
        }
        axes.push_back(ax.z);
    }
    return axes;
}

// ---------------------------------------------------------------------------

void criterion_1_blood() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    auto input = load_input(data_path("blood_eigen.csv"), LoadMode::Eigen, Standardize::Cov, 4);
    Tuning tuning;
    auto ranked = total_order(harvest(input, tuning));
    double ms = ms_since(t0);

    c.expect(ranked.size() == 3, "harvest size " + std::to_string(ranked.size()) + " != 3");
    if (!ranked.empty()) {
        const auto& top = ranked.front();
        c.expect(top.star.stars == 2, "top solution is not two-star");
        bool all_one = true;
        for (const auto& ax : top.axes)
            for (auto e : ax.z)
                if (std::abs(e) != 1) all_one = false;
        c.expect(all_one, "top solution is not all +-1");
        const std::vector<IntVec> reference = {
            {1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, -1}};
        c.expect(axes_equal(top, reference), "top solution differs from the published columns");
        auto var = variance_explained(input, top);
        c.expect(var.has_value(), "variance diagnostics unavailable");
        if (var) {
            const double expect[4] = {57.0, 23.8, 10.5, 8.6};
            for (int r = 0; r < 4; ++r)
                c.expect(std::abs((*var)[static_cast<std::size_t>(r)] - expect[r]) <= 0.5,
                         "variance % off at axis " + std::to_string(r + 1));
        }
    }
    c.expect(ms < 1000.0, "runtime " + std::to_string(ms) + " ms >= 1 s");
    report(1, "blood-flow fixture", c.ok, c.why);
}

void criterion_2_exams() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    auto input = load_input(data_path("exams_eigen.csv"), LoadMode::Eigen, Standardize::Corr, 5);
    Tuning tuning;
    SweepRecord rec = run_order(input, tuning, Order::F);
    auto ranked = total_order(harvest(input, tuning));
    double ms = ms_since(t0);

    const std::vector<IntVec> first_sweep_axes = {
        {1, 1, 1, 1, 1}, {1, 1, 0, -1, -1}, {1, -1, 0, 0, 0}, {0, 0, 0, 1, -1}, {1, 1, -4, 1, 1}};
    const std::vector<IntVec> third_sweep_axes = {
        {1, 1, 1, 1, 1}, {1, 1, 0, -1, -1}, {2, -2, 0, -1, 1}, {1, -1, 0, 2, -2}, {1, 1, -4, 1, 1}};
    c.expect(rec.solutions.size() == 2, "order F complete solutions != 2");
    if (rec.solutions.size() == 2) {
        c.expect(axes_equal(rec.solutions[0], first_sweep_axes), "first F solution differs from the published set");
        c.expect(axes_equal(rec.solutions[1], third_sweep_axes), "second F solution differs from the published set");
        const double acc4[5] = {0.997, 0.973, 0.9375, 0.937, 0.974};
        const double acc6[5] = {0.997, 0.973, 0.980, 0.979, 0.974};
        for (int r = 0; r < 5; ++r) {
            c.expect(std::abs(rec.solutions[0].axes[static_cast<std::size_t>(r)].accuracy - acc4[r]) <= 0.005,
                     "first-set accuracy off at axis " + std::to_string(r + 1));
            c.expect(std::abs(rec.solutions[1].axes[static_cast<std::size_t>(r)].accuracy - acc6[r]) <= 0.005,
                     "second-set accuracy off at axis " + std::to_string(r + 1));
        }
    }
    c.expect(rec.thetas.size() >= 3, "fewer than three theta steps");
    if (rec.thetas.size() >= 3) {
        c.expect(std::abs(std::cos(rec.thetas[2]) - 0.9375) <= 0.005, "cos(theta^[3]) off");
        c.expect(!rec.complete[1], "S(theta^[2]) unexpectedly complete");
    }

    c.expect(ranked.size() == 12,
             "harvest size " + std::to_string(ranked.size()) + " != 12 (see decisions ledger)");
    auto minimal = ranked.empty() ? std::vector<std::size_t>{} : minimal_set(ranked);
    c.expect(minimal.size() == 5,
             "minimal set size " + std::to_string(minimal.size()) + " != 5 (see decisions ledger)");

    // published numbering: S1 is the first sweep set, S2 the other two-star
    // set, S4 the weighted-contrast set, S7 the third sweep set
    const std::vector<IntVec> second_two_star = {
        {1, 1, 1, 1, 1}, {1, 1, -1, -1, 0}, {1, -1, 0, 0, 0}, {1, 1, 1, 1, -4}, {0, 0, 1, -1, 0}};
    const std::vector<IntVec> weighted_contrast_set = {
        {1, 1, 1, 1, 1}, {3, 3, -2, -2, -2}, {2, -2, 0, -1, 1}, {1, -1, 0, 2, -2}, {0, 0, -2, 1, 1}};
    const SolutionCandidate *s1 = nullptr, *s2 = nullptr, *s4 = nullptr, *s7 = nullptr;
    for (const auto& s : ranked) {
        if (axes_equal(s, first_sweep_axes)) s1 = &s;
        if (axes_equal(s, second_two_star)) s2 = &s;
        if (axes_equal(s, weighted_contrast_set)) s4 = &s;
        if (axes_equal(s, third_sweep_axes)) s7 = &s;
    }
    c.expect(s1 && s1->star.stars == 2 && s1->star.structure_type == StructureType::A,
             "S1 not classified two-star type A");
    c.expect(s2 && s2->star.stars == 2 && s2->star.structure_type == StructureType::A,
             "S2 not classified two-star type A");
    auto dominates = [](const SolutionCandidate& a, const SolutionCandidate& b) {
        return a.discr <= b.discr && a.compl_score <= b.compl_score &&
               (a.discr < b.discr || a.compl_score < b.compl_score);
    };
    c.expect(s4 && s1 && dominates(*s4, *s1), "S4 does not dominate S1");
    c.expect(s4 && s7 && dominates(*s4, *s7),
             "S4 does not dominate S7 (impossible from published data; see decisions ledger)");
    c.expect(ms < 5000.0, "runtime " + std::to_string(ms) + " ms >= 5 s");
    report(2, "exams fixture", c.ok, c.why);
}

void criterion_3_exams_diagnostics() {
    Check c;
    auto input = load_input(data_path("exams_eigen.csv"), LoadMode::Eigen, Standardize::Corr, 5);
    Tuning tuning;
    auto ranked = total_order(harvest(input, tuning));
    const std::vector<IntVec> first_sweep_axes = {
        {1, 1, 1, 1, 1}, {1, 1, 0, -1, -1}, {1, -1, 0, 0, 0}, {0, 0, 0, 1, -1}, {1, 1, -4, 1, 1}};
    const SolutionCandidate* s1 = nullptr;
    for (const auto& s : ranked)
        if (axes_equal(s, first_sweep_axes)) s1 = &s;
    c.expect(s1 != nullptr, "S1 not found in the harvest");
    if (s1) {
        auto corr = component_correlations(input, *s1);
        c.expect(corr.has_value(), "correlations unavailable");
        if (corr) {
            // the two largest off-diagonal magnitudes and their pairs
            std::vector<std::pair<double, std::pair<int, int>>> mags;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    mags.push_back({std::abs(corr->at(i, j)), {i + 1, j + 1}});
            std::sort(mags.begin(), mags.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            char buf[160];
            std::snprintf(buf, sizeof buf, "largest are (%d,%d)=%.3f and (%d,%d)=%.3f",
                          mags[0].second.first, mags[0].second.second, mags[0].first,
                          mags[1].second.first, mags[1].second.second, mags[1].first);
            c.expect(std::abs(mags[0].first - 0.2) <= 0.05 && std::abs(mags[1].first - 0.2) <= 0.05,
                     std::string("two largest not about 0.2: ") + buf);
            auto is_pair = [&](int a, int b, const std::pair<int, int>& p2) {
                return p2.first == a && p2.second == b;
            };
            bool pairs_match = (is_pair(1, 5, mags[0].second) && is_pair(1, 4, mags[1].second)) ||
                               (is_pair(1, 4, mags[0].second) && is_pair(1, 5, mags[1].second));
            c.expect(pairs_match,
                     std::string(buf) + " rather than (1,5) and (1,4) (paper typo; see decisions ledger)");
        }
    }
    report(3, "exams diagnostics", c.ok, c.why);
}

void criterion_4_subspace_identity() {
    Check c;
    auto input = load_input(data_path("exams_eigen.csv"), LoadMode::Eigen, Standardize::Corr, 5);
    Tuning tuning;
    SweepRecord rec = run_order(input, tuning, Order::F);
    c.expect(rec.solutions.size() == 2, "need the two consecutive complete F solutions");
    if (rec.solutions.size() == 2) {
        const int r_n = 3;  // the change index taking theta^[2] to theta^[3]
        std::vector<IntVec> joint, second;
        for (int r = r_n; r <= 5; ++r) joint.push_back(rec.solutions[0].axes[static_cast<std::size_t>(r - 1)].z);
        for (int r = r_n; r <= 5; ++r) {
            joint.push_back(rec.solutions[1].axes[static_cast<std::size_t>(r - 1)].z);
            second.push_back(rec.solutions[1].axes[static_cast<std::size_t>(r - 1)].z);
        }
        c.expect(int_rank(second) == 5 - r_n + 1, "changed block is rank deficient");
        c.expect(int_rank(joint) == 5 - r_n + 1, "spans differ across the schedule step");
        c.expect(rec.solutions[0].axes[4].z == rec.solutions[1].axes[4].z,
                 "fifth axis changed between theta^[1] and theta^[3]");
    }
    report(4, "subspace identity", c.ok, c.why);
}

void criterion_5_oracle_equivalence() {
    Check c;
    std::mt19937_64 rng(515);
    std::normal_distribution<double> g(0.0, 1.0);
    int instances = 0, r1_total = 0, r1_match = 0;
    while (instances < 220) {
        int p = 2 + static_cast<int>(rng() % 3);
        int priors = static_cast<int>(rng() % 2);
        auto z_prev = random_orthogonal_axes(p, priors, rng);
        bool too_complex = false;
        for (const auto& z : z_prev)
            for (auto e : z)
                if (std::abs(e) > 3) too_complex = true;
        if (too_complex) z_prev.clear();
        Vec q(static_cast<std::size_t>(p));
        for (auto& e : q) e = g(rng);
        double n = norm(q);
        if (n < 1e-6) continue;
        for (auto& e : q) e /= n;

        IntegerProjector h = projector_init(p);
        for (const auto& z : z_prev) h = projector_absorb(h, z);
        const std::int64_t n_star = 3;
        auto oracle = oracle_best_axis(q, z_prev, kCos45, n_star);
        auto hybrid = best_simple_axis(q, z_prev, h, kCos45, n_star);
        ++instances;
        if (hybrid) {
            c.expect(oracle.has_value(), "hybrid found an axis the oracle missed");
            if (oracle) c.expect(hybrid->complexity >= oracle->complexity, "hybrid beat the oracle complexity");
            for (const auto& z : z_prev)
                c.expect(dot128(hybrid->z, z) == 0, "inexact orthogonality");
            c.expect(hybrid->accuracy > kCos45, "accuracy at or below cos(theta)");
            c.expect(hybrid->complexity <= n_star, "complexity above N*");
            c.expect(hcf(hybrid->z) == 1, "non-coprime axis");
        }
        if (z_prev.empty()) {
            ++r1_total;
            if (hybrid && oracle && hybrid->z == oracle->z) ++r1_match;
        }
    }
    c.expect(instances >= 200, "not enough instances");
    c.expect(r1_total > 0 && static_cast<double>(r1_match) >= 0.95 * static_cast<double>(r1_total),
             "r=1 oracle agreement below 95% (" + std::to_string(r1_match) + "/" +
                 std::to_string(r1_total) + ")");
    report(5, "oracle equivalence", c.ok, c.why);
}

void criterion_6_projector_suite() {
    Check c;
    std::mt19937_64 rng(606);
    int sequences = 0;
    while (sequences < 1000) {
        int p = 2 + static_cast<int>(rng() % 9);
        auto axes = random_orthogonal_axes(p, 1 + static_cast<int>(rng() % p), rng);
        if (axes.empty()) continue;
        ++sequences;
        IntegerProjector h = projector_init(p);
        Mat f = Mat::identity(p);
        for (const auto& z : axes) {
            try {
                h = projector_absorb(h, z);
            } catch (const OverflowError&) {
                break;
            }
            double zz = 0.0;
            for (auto e : z) zz += static_cast<double>(e) * static_cast<double>(e);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    f.at(i, j) -= static_cast<double>(z[static_cast<std::size_t>(i)]) *
                                  static_cast<double>(z[static_cast<size_t>(j)]) / zz;

            for (int i = 0; i < p && c.ok; ++i)
                for (int j = 0; j < p && c.ok; ++j) {
                    Int128 s = 0;
                    for (int t = 0; t < p; ++t) s += h.at(i, t) * h.at(t, j);
                    c.expect(s == h.n * h.at(i, j), "h^2 != n h");
                }
            Int128 tr = 0;
            for (int i = 0; i < p; ++i) tr += h.at(i, i);
            c.expect(tr == h.n * (p - h.r), "trace != n (p - r)");
            double nd = static_cast<double>(h.n);
            for (int i = 0; i < p && c.ok; ++i)
                for (int j = 0; j < p && c.ok; ++j)
                    c.expect(std::abs(static_cast<double>(h.at(i, j)) / nd - f.at(i, j)) <= 1e-12,
                             "float projector mismatch");
        }
        if (!c.ok) break;
    }
    report(6, "projector suite", c.ok, c.why);
}

void criterion_7_geometry_suite() {
    Check c;
    std::mt19937_64 rng(707);
    std::normal_distribution<double> g(0.0, 1.0);
    auto random_unit = [&](int p) {
        Vec v(static_cast<std::size_t>(p));
        double n = 0.0;
        while (n < 1e-6) {
            for (auto& e : v) e = g(rng);
            n = norm(v);
        }
        for (auto& e : v) e /= n;
        return v;
    };
    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        Vec x = random_unit(4), y = random_unit(4), z = random_unit(4);
        c.expect(axis_distance_delta(x, z) <= axis_distance_delta(x, y) + axis_distance_delta(y, z) + 1e-12,
                 "triangle inequality failed");
    }
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);
        int p = 4 + static_cast<int>(rng() % 3);
        std::vector<Vec> xs, ys;
        double min_acc = 1.0;
        for (int r = 0; r < m; ++r) {
            xs.push_back(random_unit(p));
            ys.push_back(random_unit(p));
            min_acc = std::min(min_acc, accuracy(xs.back(), ys.back()));
        }
        double delta = set_distance_delta(xs, ys);
        c.expect(std::abs((1.0 - delta * delta) - min_acc) <= 1e-12, "MA != 1 - Delta^2");
    }
    int checked = 0;
    while (checked < 500 && c.ok) {
        int p = 3 + static_cast<int>(rng() % 4);
        auto basis = random_orthogonal_axes(p, 1 + static_cast<int>(rng() % 2), rng);
        if (basis.empty()) continue;
        Vec q = random_unit(p);
        auto res = project_residual(q, basis);
        if (res.max_accuracy < 1e-6) continue;
        // any z orthogonal to the basis, from the exact projector
        IntegerProjector h = projector_init(p);
        for (const auto& zz : basis) h = projector_absorb(h, zz);
        IntVec v(static_cast<std::size_t>(p));
        for (auto& e : v) e = static_cast<std::int64_t>(rng() % 9) - 4;
        if (is_zero(v)) continue;
        std::vector<Int128> w;
        try {
            w = h.apply_int(v);
        } catch (const OverflowError&) {
            continue;
        }
        IntVec z(static_cast<std::size_t>(p));
        bool zero = true, ok = true;
        for (int i = 0; i < p; ++i) {
            if (w[static_cast<std::size_t>(i)] > INT64_MAX / 2 || w[static_cast<std::size_t>(i)] < INT64_MIN / 2) ok = false;
            else z[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(w[static_cast<std::size_t>(i)]);
            if (z[static_cast<std::size_t>(i)] != 0) zero = false;
        }
        if (!ok || zero) continue;
        double lhs = accuracy(q, z);
        double rhs = res.max_accuracy * accuracy(res.q_perp, z);
        c.expect(std::abs(lhs - rhs) <= 1e-10, "multiplicative accuracy law failed");
        ++checked;
    }
    report(7, "geometry suite", c.ok, c.why);
}

void criterion_8_hadamard_recovery() {
    Check c;
    // noiseless: exact population eigenvectors as eigen-only input
    {
        auto ds = simulate_dataset(8, 1);
        Mat vectors(8, 4);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 8; ++i) vectors.at(i, j) = ds.q_pop.at(i, j);
        Vec values(ds.spectrum.begin(), ds.spectrum.begin() + 4);
        auto input = EigenInput::make(std::move(vectors), std::move(values), std::nullopt,
                                      SourceKind::EigenOnly, 1e-8);
        Tuning tuning;
        auto ranked = total_order(harvest(input, tuning));
        c.expect(!ranked.empty(), "noiseless harvest empty");
        if (!ranked.empty()) {
            c.expect(std::abs(ranked.front().compl_score - 1.5) <= 1e-12, "noiseless compl != 1.5");
            c.expect(ranked.front().ma >= 0.99, "noiseless MA < 0.99");
        }
    }
    // sampled: 100 replications at p = 8, n = 29
    auto t0 = std::chrono::steady_clock::now();
    int hadamard_count = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        auto ds = simulate_dataset(8, 800 + static_cast<std::uint64_t>(rep));
        const int n = ds.data.rows, p = ds.data.cols;
        Mat x = ds.data;
        for (int j = 0; j < p; ++j) {
            double mean = 0.0;
            for (int i = 0; i < n; ++i) mean += x.at(i, j);
            mean /= n;
            for (int i = 0; i < n; ++i) x.at(i, j) -= mean;
        }
        Mat s(p, p);
        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                double v = 0.0;
                for (int i = 0; i < n; ++i) v += x.at(i, a) * x.at(i, b);
                s.at(a, b) = s.at(b, a) = v / (n - 1);
            }
        auto eig = eigendecompose(SymMatrix(s));
        Mat vectors(p, 4);
        Vec values(4);
        for (int j = 0; j < 4; ++j) {
            values[static_cast<std::size_t>(j)] = eig.values[static_cast<std::size_t>(j)];
            for (int i = 0; i < p; ++i) vectors.at(i, j) = eig.vectors.at(i, j);
        }
        auto input = EigenInput::make(std::move(vectors), std::move(values), s,
                                      SourceKind::Covariance, 1e-8);
        Tuning tuning;
        auto ranked = total_order(harvest(input, tuning));
        if (!ranked.empty() && std::abs(ranked.front().compl_score - 1.5) <= 1e-12) ++hadamard_count;
    }
    double ms = ms_since(t0);
    std::printf("       criterion 8 note: %d/%d replications recovered compl = 1.5 (%.1f s)\n",
                hadamard_count, reps, ms / 1000.0);
    c.expect(hadamard_count > 0, "no replication recovered the Hadamard structure");
    c.expect(ms < 120000.0, "sampled study exceeded 2 minutes");
    report(8, "Hadamard recovery", c.ok, c.why);
}

void criterion_9_timing() {
    Check c;
    auto analyze_once = [&](int p, std::uint64_t seed) {
        auto ds = simulate_dataset(p, seed);
        const int n = ds.data.rows;
        Mat x = ds.data;
        for (int j = 0; j < p; ++j) {
            double mean = 0.0;
            for (int i = 0; i < n; ++i) mean += x.at(i, j);
            mean /= n;
            for (int i = 0; i < n; ++i) x.at(i, j) -= mean;
        }
        Mat s(p, p);
        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                double v = 0.0;
                for (int i = 0; i < n; ++i) v += x.at(i, a) * x.at(i, b);
                s.at(a, b) = s.at(b, a) = v / (n - 1);
            }
        auto eig = eigendecompose(SymMatrix(s));
        Mat vectors(p, 4);
        Vec values(4);
        for (int j = 0; j < 4; ++j) {
            values[static_cast<std::size_t>(j)] = eig.values[static_cast<std::size_t>(j)];
            for (int i = 0; i < p; ++i) vectors.at(i, j) = eig.vectors.at(i, j);
        }
        auto input = EigenInput::make(std::move(vectors), std::move(values), s,
                                      SourceKind::Covariance, 1e-8);
        Tuning tuning;
        auto t0 = std::chrono::steady_clock::now();
        auto sols = harvest(input, tuning);
        (void)sols;
        return ms_since(t0);
    };
    const int reps = 10;
    double t8 = 0.0, t32 = 0.0;
    for (int rep = 0; rep < reps; ++rep) t8 += analyze_once(8, 900 + static_cast<std::uint64_t>(rep));
    for (int rep = 0; rep < reps; ++rep) t32 += analyze_once(32, 900 + static_cast<std::uint64_t>(rep));
    t8 /= reps;
    t32 /= reps;
    std::printf("       criterion 9 note: mean analyze %.2f ms at p=8, %.2f ms at p=32 (ratio %.2f)\n",
                t8, t32, t32 / t8);
    c.expect(t32 / t8 <= 16.0, "t(32)/t(8) > 16");
    report(9, "timing growth", c.ok, c.why);
}

void criterion_10_determinism() {
    Check c;
    auto run_once = [&](const std::string& tag) {
        auto input = load_input(data_path("exams_eigen.csv"), LoadMode::Eigen, Standardize::Corr, 5);
        Tuning tuning;
        auto rep = build_report(input, tuning, harvest(input, tuning));
        std::string json_path = "/tmp/osca_accept_" + tag + ".json";
        std::string svg_path = "/tmp/osca_accept_" + tag + ".svg";
        emit_report(rep, json_path, svg_path);
        auto slurp = [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        return std::pair<std::string, std::string>{slurp(json_path), slurp(svg_path)};
    };
    auto a = run_once("a");
    auto b = run_once("b");
    c.expect(!a.first.empty() && !a.second.empty(), "empty outputs");
    c.expect(a.first == b.first, "JSON outputs differ between runs");
    c.expect(a.second == b.second, "SVG outputs differ between runs");
    report(10, "determinism", c.ok, c.why);
}

}  // namespace

int main() {
    criterion_1_blood();
    criterion_2_exams();
    criterion_3_exams_diagnostics();
    criterion_4_subspace_identity();
    criterion_5_oracle_equivalence();
    criterion_6_projector_suite();
    criterion_7_geometry_suite();
    criterion_8_hadamard_recovery();
    criterion_9_timing();
    criterion_10_determinism();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
