#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqtype/points.hpp"
#include "support/oracles.hpp"

using namespace seqtype;

namespace {

std::vector<Vector> moment_points(const std::vector<Rational>& ts, int d, bool star = false) {
    std::vector<Vector> pts;
    for (const auto& t : ts) pts.push_back(star ? moment_star(t, d) : moment(t, d));
    return pts;
}

std::vector<Rational> range_rationals(int from, int count) {
    std::vector<Rational> ts;
    for (int i = 0; i < count; ++i) ts.push_back(Rational(from + i));
    return ts;
}

} // namespace

TEST_CASE("moment curve coordinates") {
    CHECK(moment(Rational(2), 3) == Vector{Rational(2), Rational(4), Rational(8)});
    CHECK(moment_star(Rational(2), 3) == Vector{Rational(2), Rational(4), Rational(-8)});
    CHECK(moment(Rational(0), 4).is_zero());
}

TEST_CASE("orientation sign on the moment curve") {
    CHECK(orientation_sign(moment_points(range_rationals(1, 3), 2)) == 1);
    CHECK(orientation_sign(moment_points(range_rationals(1, 3), 2, true)) == -1);

    std::vector<Vector> collinear = {
        Vector{Rational(0), Rational(0)}, Vector{Rational(1), Rational(1)},
        Vector{Rational(2), Rational(2)}};
    CHECK_THROWS_AS(orientation_sign(collinear), general_position_error);
}

TEST_CASE("moment-curve signs for random increasing tuples, d = 2..5") {
    oracle::Gen gen(101);
    for (int d = 2; d <= 5; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            auto ts = gen.increasing(d + 1);
            CHECK(orientation_sign(moment_points(ts, d)) == 1);
            CHECK(orientation_sign(moment_points(ts, d, true)) == -1);
        }
    }
}

TEST_CASE("homogeneous sign") {
    PointSequence gamma{3, moment_points(range_rationals(1, 5), 3)};
    auto s = homogeneous_sign(gamma);
    REQUIRE(s.has_value());
    CHECK(*s == 1);

    // single-tuple edge: n = d+1
    PointSequence single{2, moment_points(range_rationals(1, 3), 2, true)};
    auto s2 = homogeneous_sign(single);
    REQUIRE(s2.has_value());
    CHECK(*s2 == -1);

    // mixed signs: three parabola points plus a reflected fourth
    PointSequence mixed{2, moment_points(range_rationals(1, 3), 2)};
    mixed.points.push_back(moment_star(Rational(4), 2));
    // oracle: exhibit two subsets with opposite determinant signs
    int s_123 = orientation_sign({mixed.points[0], mixed.points[1], mixed.points[2]});
    int s_124 = orientation_sign({mixed.points[0], mixed.points[1], mixed.points[3]});
    CHECK(s_123 != s_124);
    CHECK(!homogeneous_sign(mixed).has_value());
}

TEST_CASE("radon partition examples") {
    std::vector<Vector> tri = {
        Vector{Rational(0), Rational(0)}, Vector{Rational(1), Rational(0)},
        Vector{Rational(0), Rational(1)},
        Vector{Rational(1, 3), Rational(1, 3)}};
    RadonPartition p = radon_partition(tri);
    CHECK(p.X == std::set<int>{1, 2, 3});
    CHECK(p.Y == std::set<int>{4});
    CHECK(!is_interlacing(p));

    RadonPartition parab = radon_partition(moment_points(range_rationals(1, 4), 2));
    CHECK(parab.X == std::set<int>{1, 3});
    CHECK(parab.Y == std::set<int>{2, 4});
    CHECK(is_interlacing(parab));

    RadonPartition m3 = radon_partition(moment_points(range_rationals(1, 5), 3));
    CHECK(m3.X == std::set<int>{1, 3, 5});
    CHECK(m3.Y == std::set<int>{2, 4});
    CHECK(is_interlacing(m3));
}

TEST_CASE("radon of random increasing moment points interlaces with 1 in X") {
    oracle::Gen gen(103);
    for (int d = 2; d <= 5; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            auto ts = gen.increasing(d + 2);
            RadonPartition p = radon_partition(moment_points(ts, d));
            CHECK(p.X.count(1) == 1);
            CHECK(is_interlacing(p));
            std::set<int> odds, evens;
            for (int i = 1; i <= d + 2; ++i) (i % 2 ? odds : evens).insert(i);
            CHECK(p.X == odds);
            CHECK(p.Y == evens);
        }
    }
}

TEST_CASE("interlacing edge cases") {
    RadonPartition tiny;
    tiny.n = 2;
    tiny.X = {1};
    tiny.Y = {2};
    CHECK(is_interlacing(tiny));
}

TEST_CASE("orientation sign is translation invariant and GL-equivariant") {
    oracle::Gen gen(107);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(gen.next() % 3);
        std::vector<Vector> pts;
        for (int i = 0; i <= d; ++i) pts.push_back(gen.vector(d));
        int s;
        try {
            s = orientation_sign(pts);
        } catch (const general_position_error&) {
            continue;
        }
        Vector w = gen.vector(d);
        std::vector<Vector> shifted;
        for (const auto& p : pts) shifted.push_back(p + w);
        CHECK(orientation_sign(shifted) == s);

        // random linear map with nonzero determinant
        Matrix T(d, d);
        Rational dT;
        do {
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) T.at(r, c) = gen.rational(4, 3);
            dT = det(T);
        } while (dT.is_zero());
        std::vector<Vector> mapped;
        for (const auto& p : pts) {
            Vector q(d);
            for (int r = 0; r < d; ++r) {
                Rational acc;
                for (int c = 0; c < d; ++c) acc += T.at(r, c) * p[c];
                q[r] = acc;
            }
            mapped.push_back(q);
        }
        CHECK(orientation_sign(mapped) == (dT.sign() > 0 ? s : -s));
    }
}

TEST_CASE("radon partition witnesses an exact convex-hull intersection") {
    oracle::Gen gen(109);
    for (int trial = 0; trial < 15; ++trial) {
        int d = 2 + static_cast<int>(gen.next() % 3);
        std::vector<Vector> pts;
        for (int i = 0; i < d + 2; ++i) pts.push_back(gen.vector(d));
        Vector lambda;
        try {
            lambda = affine_dependence(pts);
        } catch (const general_position_error&) {
            continue;
        }
        RadonPartition p = radon_partition(pts);
        // sum over X of lambda_i, scaled: the same point written two ways
        Rational sx;
        Vector wx(d), wy(d);
        for (int i = 0; i < d + 2; ++i) {
            if (p.X.count(i + 1)) {
                sx += lambda[i];
                wx = wx + lambda[i] * pts[i];
            } else {
                wy = wy + (-lambda[i]) * pts[i];
            }
        }
        CHECK(sx.sign() == 1);           // X carries positive total weight
        CHECK(wx == wy);                 // identical intersection point, scaled by sx
        // each class's coefficients are a genuine convex combination
        for (int i = 0; i < d + 2; ++i) {
            Rational coeff = p.X.count(i + 1) ? lambda[i] / sx : (-lambda[i]) / sx;
            CHECK(coeff.sign() == 1);
            CHECK(coeff <= Rational(1));
        }
    }
}
