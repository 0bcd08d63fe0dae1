#include "osca/sim.hpp"

#include <cmath>

#include "osca/geometry.hpp"
#include "osca/nratio.hpp"
#include "osca/search.hpp"

namespace osca {

std::uint64_t CounterRng::next_u64() {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (++counter);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double CounterRng::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * (1.0 / 9007199254740993.0);
}

double CounterRng::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::vector<IntVec> hadamard(int p) {
    if (p < 2 || (p & (p - 1)) != 0)
        throw ValidationError("hadamard: order must be a power of two, at least 2");
    std::vector<IntVec> cols(static_cast<std::size_t>(p), IntVec(static_cast<std::size_t>(p), 1));
    for (int block = 1; block < p; block *= 2)
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < p; ++i)
                if ((i / block) % 2 == 1 && (j / block) % 2 == 1)
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *= -1;
    return cols;
}

SimulatedDataset simulate_dataset(int p, std::uint64_t seed) {
    if (p < 8) throw ValidationError("simulate_dataset: p must be at least 8");
    auto had = hadamard(p);
    SimulatedDataset out;
    out.q_pop = Mat(p, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i)
            out.q_pop.at(i, j) = static_cast<double>(had[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) * scale;

    out.spectrum.assign(static_cast<std::size_t>(p), 1.0 / static_cast<double>(p - 4));
    out.spectrum[0] = 16.0;
    out.spectrum[1] = 8.0;
    out.spectrum[2] = 4.0;
    out.spectrum[3] = 2.0;

    const int n = 4 * p - 3;
    out.data = Mat(n, p);
    CounterRng rng(seed);
    Vec eps(static_cast<std::size_t>(p));
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i < p; ++i)
            eps[static_cast<std::size_t>(i)] =
                rng.next_normal() * std::sqrt(out.spectrum[static_cast<std::size_t>(i)]);
        for (int i = 0; i < p; ++i) {
            double v = 0.0;
            for (int j = 0; j < p; ++j) v += out.q_pop.at(i, j) * eps[static_cast<std::size_t>(j)];
            out.data.at(row, i) = v;
        }
    }
    return out;
}

std::optional<MinComplexity> min_complexity_single_axis(const Vec& q, double cos_theta) {
    bool all_zero = true;
    for (double v : q)
        if (v != 0.0) all_zero = false;
    if (all_zero) throw ValidationError("min_complexity_single_axis: zero vector");

    if (q.size() <= 6) {
        auto ax = oracle_best_axis(q, {}, cos_theta, 9);
        if (!ax) return std::nullopt;
        return MinComplexity{ax->complexity, true};
    }
    for (std::int64_t n = 1; n <= 9; ++n) {
        IntegerAxis ax = nratio_simplify(q, n).axis();
        if (accuracy(q, ax.z) > cos_theta) return MinComplexity{ax.complexity, false};
    }
    return std::nullopt;
}

}  // namespace osca
