#include "osca/core.hpp"

#include <cmath>

namespace osca {

double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

double norm(const IntVec& z) {
    double s = 0.0;
    for (auto e : z) s += static_cast<double>(e) * static_cast<double>(e);
    return std::sqrt(s);
}

std::int64_t sq_norm_i64(const IntVec& z) {
    Int128 s = 0;
    for (auto e : z) s = checked_add(s, checked_mul(e, e));
    if (s > Int128(INT64_MAX)) throw OverflowError{};
    return static_cast<std::int64_t>(s);
}

bool is_zero(const IntVec& z) {
    for (auto e : z)
        if (e != 0) return false;
    return true;
}

std::string to_string_i128(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

}  // namespace osca
