#include "osca/nratio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace osca {

IntVec NRatioResult::raw() const {
    IntVec z(z_sorted.size(), 0);
    for (std::size_t pos = 0; pos < z_sorted.size(); ++pos) {
        int orig = perm[pos];
        z[static_cast<std::size_t>(orig)] = signs[static_cast<std::size_t>(orig)] * z_sorted[pos];
    }
    return z;
}

NRatioResult nratio_simplify(const Vec& u, std::int64_t n) {
    const std::size_t l = u.size();
    if (n < 1) throw ValidationError("nratio_simplify: N must be >= 1");
    bool all_zero = true;
    for (double v : u)
        if (v != 0.0) all_zero = false;
    if (l == 0 || all_zero) throw ValidationError("nratio_simplify: zero vector");

    NRatioResult r;
    r.n = n;
    r.signs.resize(l);
    r.perm.resize(l);
    std::iota(r.perm.begin(), r.perm.end(), 0);
    std::stable_sort(r.perm.begin(), r.perm.end(), [&](int i, int j) {
        return std::abs(u[static_cast<std::size_t>(i)]) > std::abs(u[static_cast<std::size_t>(j)]);
    });
    for (std::size_t i = 0; i < l; ++i) r.signs[i] = (u[i] < 0.0) ? -1 : 1;

    r.z_sorted.assign(l, 0);
    r.l_values.assign(l, 0);
    r.z_sorted[0] = n;
    const double u1 = std::abs(u[static_cast<std::size_t>(r.perm[0])]);
    const double nd = static_cast<double>(n);
    for (std::size_t pos = 1; pos < l; ++pos) {
        double lambda = std::abs(u[static_cast<std::size_t>(r.perm[pos])]) / u1;
        std::int64_t lr = static_cast<std::int64_t>(std::floor(lambda * nd));
        if (lr > n) lr = n;  // lambda == 1 up to rounding
        double psi = std::atan(lambda);
        double alpha = std::atan(static_cast<double>(lr) / nd);
        double beta = std::atan(static_cast<double>(lr + 1) / nd);
        r.l_values[pos] = lr;
        r.z_sorted[pos] = (psi <= 0.5 * (alpha + beta)) ? lr : lr + 1;
        r.ops += 1;
    }
    return r;
}

std::vector<IntVec> nratio_neighbors(const NRatioResult& r) {
    std::vector<IntVec> out;
    const std::size_t l = r.z_sorted.size();
    for (std::size_t pos = 1; pos < l; ++pos) {
        IntVec zs = r.z_sorted;
        zs[pos] = (zs[pos] == r.l_values[pos]) ? zs[pos] + 1 : zs[pos] - 1;
        NRatioResult tmp = r;
        tmp.z_sorted = std::move(zs);
        IntVec z = tmp.raw();
        if (!is_zero(z)) out.push_back(std::move(z));
    }
    return out;
}

}  // namespace osca
