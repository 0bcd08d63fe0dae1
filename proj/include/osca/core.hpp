#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace osca {

using Vec = std::vector<double>;
using IntVec = std::vector<std::int64_t>;
using Int128 = __int128;

/// Thrown when exact integer arithmetic would exceed 128 bits. Callers in the
/// search layer treat this as "abandon the current candidate", never as a
/// fatal error.
struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

inline Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t hcf(const IntVec& z) {
    std::uint64_t g = 0;
    for (auto v : z) {
        std::uint64_t b = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        while (b != 0) {
            std::uint64_t t = g % b;
            g = b;
            b = t;
        }
    }
    return static_cast<std::int64_t>(g);
}

inline Int128 dot128(const IntVec& a, const IntVec& b) {
    Int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double dot(const Vec& a, const IntVec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<double>(b[i]);
    return s;
}

double norm(const Vec& v);
double norm(const IntVec& z);
std::int64_t sq_norm_i64(const IntVec& z);
bool is_zero(const IntVec& z);

std::string to_string_i128(Int128 v);

}  // namespace osca
