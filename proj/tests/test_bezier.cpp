#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "insplan/bezier.hpp"
#include "insplan/errors.hpp"

using insplan::BezierSegment;
using insplan::CompositeBezier;
using insplan::Vec3;

namespace {

std::vector<Vec3> random_controls(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<Vec3> c;
    for (int i = 0; i <= degree; ++i) c.push_back({u(rng), u(rng), u(rng)});
    return c;
}

}  // namespace

TEST_CASE("binomial: Pascal identity, exact small values, out-of-range zeros") {
    for (int n = 1; n <= 25; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(insplan::binomial(n, k) ==
                  insplan::binomial(n - 1, k - 1) + insplan::binomial(n - 1, k));
        }
    }
    CHECK(insplan::binomial(0, 0) == 1.0);
    CHECK(insplan::binomial(5, 2) == 10.0);
    CHECK(insplan::binomial(10, 5) == 252.0);
    CHECK(insplan::binomial(20, 10) == 184756.0);
    CHECK(insplan::binomial(4, -1) == 0.0);
    CHECK(insplan::binomial(4, 5) == 0.0);
}

TEST_CASE("bernstein_eval agrees with de Casteljau to 1e-12") {
    std::mt19937_64 rng(11);
    for (int degree = 1; degree <= 7; ++degree) {
        for (int set = 0; set < 5; ++set) {
            const auto c = random_controls(rng, degree);
            bool ok = true;
            for (int i = 0; i <= 40; ++i) {
                const double s = i / 40.0;
                ok &= (insplan::bernstein_eval(c, s) - insplan::de_casteljau(c, s))
                          .norm() <= 1e-12;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("bernstein_eval interpolates the endpoint controls exactly") {
    std::mt19937_64 rng(12);
    for (int degree = 1; degree <= 6; ++degree) {
        const auto c = random_controls(rng, degree);
        CHECK(insplan::bernstein_eval(c, 0.0) == c.front());
        CHECK(insplan::bernstein_eval(c, 1.0) == c.back());
    }
}

TEST_CASE("bernstein_eval has linear precision") {
    // Uniformly spaced collinear controls reproduce the straight line.
    const Vec3 a(1, -2, 3), b(4, 0, -1);
    for (int degree = 1; degree <= 6; ++degree) {
        std::vector<Vec3> c;
        for (int j = 0; j <= degree; ++j) {
            const double s = static_cast<double>(j) / degree;
            c.push_back((1.0 - s) * a + s * b);
        }
        bool ok = true;
        for (int i = 0; i <= 20; ++i) {
            const double s = i / 20.0;
            const Vec3 want = (1.0 - s) * a + s * b;
            ok &= (insplan::bernstein_eval(c, s) - want).norm() <= 1e-12;
        }
        CHECK(ok);
    }
}

TEST_CASE("derivative_controls: degree drop and finite-difference agreement") {
    std::mt19937_64 rng(13);
    const auto c = random_controls(rng, 5);
    const auto dc = insplan::derivative_controls(c);
    REQUIRE(dc.size() == 5);

    const double h = 1e-6;
    bool ok = true;
    for (int i = 1; i < 10; ++i) {
        const double s = i / 10.0;
        const Vec3 fd =
            (insplan::bernstein_eval(c, s + h) - insplan::bernstein_eval(c, s - h)) /
            (2.0 * h);
        ok &= (insplan::bernstein_eval(dc, s) - fd).norm() <= 1e-5;
    }
    CHECK(ok);

    // Degree-0 input: derivative is the zero curve.
    const auto flat = insplan::derivative_controls({Vec3(1, 2, 3)});
    REQUIRE(flat.size() == 1);
    CHECK(flat[0] == Vec3::Zero());
}

TEST_CASE("locate: segment boundaries, endpoint inclusion, domain errors") {
    CompositeBezier curve;
    curve.segments.push_back({{Vec3(0, 0, 0), Vec3(1, 0, 0)}, 2.0});
    curve.segments.push_back({{Vec3(1, 0, 0), Vec3(2, 0, 0)}, 3.0});
    CHECK(curve.total_duration() == 5.0);

    CHECK(curve.locate(0.0) == std::pair<int, double>{0, 0.0});
    CHECK(curve.locate(1.0) == std::pair<int, double>{0, 0.5});
    // A shared boundary belongs to the earlier segment (t <= end).
    CHECK(curve.locate(2.0) == std::pair<int, double>{0, 1.0});
    const auto [seg, s] = curve.locate(2.0 + 1e-9);
    CHECK(seg == 1);
    CHECK(s == doctest::Approx(1e-9 / 3.0));
    CHECK(curve.locate(5.0) == std::pair<int, double>{1, 1.0});

    CHECK_THROWS_AS(curve.locate(-1e-12), insplan::DomainError);
    CHECK_THROWS_AS(curve.locate(5.0 + 1e-9), insplan::DomainError);
    CHECK_THROWS_AS(curve.locate(std::numeric_limits<double>::quiet_NaN()),
                    insplan::DomainError);
}

TEST_CASE("eval_derivative: time scaling by 1/duration^k") {
    std::mt19937_64 rng(14);
    const auto controls = random_controls(rng, 5);

    CompositeBezier unit, slow;
    unit.segments.push_back({controls, 1.0});
    slow.segments.push_back({controls, 2.0});

    for (int k = 0; k <= 3; ++k) {
        bool ok = true;
        for (int i = 0; i <= 10; ++i) {
            const double s = i / 10.0;
            const Vec3 a = insplan::eval_derivative(unit, s, k);
            const Vec3 b = insplan::eval_derivative(slow, 2.0 * s, k);
            // Same local parameter; the powers of two make the scaling exact.
            ok &= (a - b * std::pow(2.0, k)).norm() <= 1e-12;
        }
        CHECK(ok);
    }
}

TEST_CASE("eval_derivative: order zero is the position, beyond-degree is zero") {
    CompositeBezier curve;
    curve.segments.push_back({{Vec3(0, 0, 0), Vec3(3, 1, 0), Vec3(6, 0, 0)}, 2.0});
    for (int i = 0; i <= 8; ++i) {
        const double t = 2.0 * i / 8.0;
        CHECK((insplan::eval_derivative(curve, t, 0) - insplan::eval_position(curve, t))
                  .norm() <= 1e-15);
        CHECK(insplan::eval_derivative(curve, t, 3) == Vec3::Zero());
        CHECK(insplan::eval_derivative(curve, t, 7) == Vec3::Zero());
    }
}

TEST_CASE("eval_derivative matches a finite difference of eval_position in time") {
    std::mt19937_64 rng(15);
    CompositeBezier curve;
    curve.segments.push_back({random_controls(rng, 5), 1.7});
    curve.segments.push_back({random_controls(rng, 5), 0.6});

    const double h = 1e-6;
    bool ok = true;
    for (const double t : {0.3, 0.9, 1.4, 1.9, 2.1}) {
        const Vec3 fd =
            (insplan::eval_position(curve, t + h) - insplan::eval_position(curve, t - h)) /
            (2.0 * h);
        ok &= (insplan::eval_derivative(curve, t, 1) - fd).norm() <= 1e-4;
    }
    CHECK(ok);
}

TEST_CASE("interpolate_composite: chord controls, durations, constant speed") {
    const std::vector<Vec3> nodes{{0, 0, 0}, {3, 0, 0}, {3, 4, 0}};
    const CompositeBezier curve = insplan::interpolate_composite(nodes, 5, 2.0);

    REQUIRE(curve.segments.size() == 2);
    CHECK(curve.segments[0].degree() == 5);
    CHECK(curve.segments[0].duration == doctest::Approx(1.5));  // 3 / 2
    CHECK(curve.segments[1].duration == doctest::Approx(2.0));  // 4 / 2

    // Controls sit uniformly on the chord.
    for (int j = 0; j <= 5; ++j) {
        const double s = j / 5.0;
        const Vec3 want = (1.0 - s) * nodes[0] + s * nodes[1];
        CHECK((curve.segments[0].controls[j] - want).norm() <= 1e-15);
    }

    // The seeded curve traces the polyline at constant speed everywhere.
    bool ok = true;
    for (int i = 1; i < 40; ++i) {
        const double t = curve.total_duration() * i / 40.0;
        ok &= std::abs(insplan::eval_derivative(curve, t, 1).norm() - 2.0) <= 1e-9;
    }
    CHECK(ok);

    // Node positions are met exactly at the junctions.
    CHECK((insplan::eval_position(curve, 0.0) - nodes[0]).norm() <= 1e-15);
    CHECK((insplan::eval_position(curve, 1.5) - nodes[1]).norm() <= 1e-12);
    CHECK((insplan::eval_position(curve, 3.5) - nodes[2]).norm() <= 1e-12);
}

TEST_CASE("interpolate_composite input validation") {
    const std::vector<Vec3> two{{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(insplan::interpolate_composite({{0, 0, 0}}, 5), insplan::InputError);
    CHECK_THROWS_AS(insplan::interpolate_composite(two, 0), insplan::InputError);
    CHECK_THROWS_AS(insplan::interpolate_composite(two, 5, 0.0), insplan::InputError);
    CHECK_THROWS_AS(insplan::interpolate_composite(two, 5, -1.0), insplan::InputError);
    CHECK_THROWS_WITH_AS(
        insplan::interpolate_composite({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}, 5),
        doctest::Contains("coincident consecutive nodes at index 1"), insplan::InputError);
}
