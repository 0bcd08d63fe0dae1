#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "osca/geometry.hpp"
#include "osca/linalg.hpp"

using namespace osca;

namespace {

Vec random_unit(int p, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(static_cast<std::size_t>(p));
    double n = 0.0;
    while (n < 1e-6) {
        for (auto& e : v) e = g(rng);
        n = norm(v);
    }
    for (auto& e : v) e /= n;
    return v;
}

}  // namespace

TEST_CASE("accuracy basic values") {
    Vec u = {0.3, -0.4, 0.5};
    CHECK(accuracy(u, u) == doctest::Approx(1.0));
    CHECK(accuracy(Vec{1, 0}, Vec{0, 1}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(accuracy(Vec{0, 0}, Vec{1, 0}), ValidationError);
}

TEST_CASE("accuracy of exams q1 against the all-ones axis") {
    auto input = fixtures::exams();
    CHECK(accuracy(input.vectors.col(0), IntVec{1, 1, 1, 1, 1}) ==
          doctest::Approx(0.997).epsilon(0.0051));
}

TEST_CASE("accuracy is scale and sign invariant") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        Vec a = random_unit(4, rng), b = random_unit(4, rng);
        double base = accuracy(a, b);
        double c1 = u(rng), c2 = u(rng);
        if (std::abs(c1) < 1e-3 || std::abs(c2) < 1e-3) continue;
        Vec a2 = a, b2 = b;
        for (auto& e : a2) e *= c1;
        for (auto& e : b2) e *= c2;
        CHECK(accuracy(a2, b2) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("axis distance on aligned, opposed and orthogonal pairs") {
    Vec x = {1.0, 0.0};
    Vec minus_x = {-1.0, 0.0};
    Vec y = {0.0, 1.0};
    CHECK(axis_distance_delta(x, x) == doctest::Approx(0.0));
    CHECK(axis_distance_delta(x, minus_x) == doctest::Approx(0.0));
    CHECK(axis_distance_delta(x, y) == doctest::Approx(1.0));
    CHECK_THROWS_AS(axis_distance_delta(Vec{2.0, 0.0}, y), ValidationError);
}

TEST_CASE("delta equals min(|x-y|,|x+y|)/sqrt(2)") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        Vec x = random_unit(5, rng), y = random_unit(5, rng);
        Vec d1(5), d2(5);
        for (int i = 0; i < 5; ++i) {
            d1[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)];
            d2[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)];
        }
        double expect = std::min(norm(d1), norm(d2)) / std::sqrt(2.0);
        CHECK(std::abs(axis_distance_delta(x, y) - expect) <= 1e-12);
    }
}

TEST_CASE("delta satisfies the triangle inequality") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10000; ++trial) {
        Vec x = random_unit(4, rng), y = random_unit(4, rng), z = random_unit(4, rng);
        double xy = axis_distance_delta(x, y);
        double yz = axis_distance_delta(y, z);
        double xz = axis_distance_delta(x, z);
        CHECK(xz <= xy + yz + 1e-12);
    }
}

TEST_CASE("set distance and the minimum accuracy identity") {
    auto input = fixtures::exams();
    std::vector<IntVec> cols = {
        {1, 1, 1, 1, 1}, {1, 1, 0, -1, -1}, {1, -1, 0, 0, 0}, {0, 0, 0, 1, -1}, {1, 1, -4, 1, 1}};
    std::vector<Vec> xs, ys;
    double min_acc = 1.0;
    for (int r = 0; r < 5; ++r) {
        xs.push_back(input.vectors.col(r));
        Vec zn(5);
        double n = norm(cols[static_cast<std::size_t>(r)]);
        for (int i = 0; i < 5; ++i)
            zn[static_cast<std::size_t>(i)] =
                static_cast<double>(cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) / n;
        ys.push_back(zn);
        min_acc = std::min(min_acc, accuracy(input.vectors.col(r), cols[static_cast<std::size_t>(r)]));
    }
    double delta = set_distance_delta(xs, ys);
    CHECK(std::abs((1.0 - delta * delta) - min_acc) <= 1e-12);

    CHECK(set_distance_delta(xs, xs) == doctest::Approx(0.0));
    CHECK_THROWS_AS(set_distance_delta(xs, {xs[0]}), ValidationError);
}

TEST_CASE("set distance is 1 when any pair is orthogonal") {
    std::vector<Vec> xs = {{1, 0, 0}, {0, 1, 0}};
    std::vector<Vec> ys = {{1, 0, 0}, {0, 0, 1}};
    CHECK(set_distance_delta(xs, ys) == doctest::Approx(1.0));
}
