#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "seqtype/linalg.hpp"
#include "seqtype/multivector.hpp"
#include "support/oracles.hpp"

using namespace seqtype;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("-12").str() == "-12");
    CHECK(Rational::parse("7/1").str() == "7");
    CHECK(Rational::parse("1/3") + Rational::parse("4/6") == Rational(1));
    CHECK_THROWS_AS(Rational::parse("1/0"), io_error);
    CHECK_THROWS_AS(Rational::parse("abc"), io_error);
    CHECK_THROWS_AS(Rational(1, 0), invalid_argument_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow2(10) == Rational(1024));
}

TEST_CASE("det basic cases") {
    Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(det(id) == Rational(1));

    Matrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 3; m.at(1, 1) = 4;
    CHECK(det(m) == Rational(-2));

    Matrix bad(2, 3);
    CHECK_THROWS_AS(det(bad), invalid_argument_error);
}

TEST_CASE("det agrees with the cofactor oracle on random rational matrices") {
    oracle::Gen gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(gen.next() % 5);
        Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = gen.rational(9, 5);
        CHECK(det(m) == oracle::det_laplace(m));
    }
}

TEST_CASE("det vanishes on equal columns and alternates under swaps") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(gen.next() % 4);
        std::vector<Vector> cols;
        for (int c = 0; c < n; ++c) cols.push_back(gen.vector(n));
        int i = static_cast<int>(gen.next() % n);
        int j = static_cast<int>(gen.next() % n);
        if (i == j) j = (j + 1) % n;

        auto dup = cols;
        dup[i] = dup[j];
        CHECK(det(Matrix::from_columns(dup)).is_zero());

        Rational before = det(Matrix::from_columns(cols));
        std::swap(cols[i], cols[j]);
        CHECK(det(Matrix::from_columns(cols)) == -before);
    }
}

TEST_CASE("affine dependence: centroid of a triangle") {
    std::vector<Vector> pts = {
        Vector{Rational(0), Rational(0)}, Vector{Rational(1), Rational(0)},
        Vector{Rational(0), Rational(1)},
        Vector{Rational(1, 3), Rational(1, 3)}};
    Vector lambda = affine_dependence(pts);
    CHECK(lambda[0] == Rational(1));
    CHECK(lambda[1] == Rational(1));
    CHECK(lambda[2] == Rational(1));
    CHECK(lambda[3] == Rational(-3));
}

TEST_CASE("affine dependence: parabola signs alternate and equations hold exactly") {
    std::vector<Vector> pts;
    for (long t = 1; t <= 4; ++t) pts.push_back(Vector{Rational(t), Rational(t * t)});
    Vector lambda = affine_dependence(pts);
    CHECK(lambda[0].sign() == 1);
    CHECK(lambda[1].sign() == -1);
    CHECK(lambda[2].sign() == 1);
    CHECK(lambda[3].sign() == -1);

    // independent oracle: row-reduction kernel of the lifted system
    Vector k = oracle::kernel_vector(pts);
    Rational ratio = lambda[0] / k[0];
    for (int i = 0; i < 4; ++i) CHECK(lambda[i] == ratio * k[i]);
}

TEST_CASE("affine dependence rejects degenerate input") {
    std::vector<Vector> pts = {
        Vector{Rational(0), Rational(0)}, Vector{Rational(1), Rational(1)},
        Vector{Rational(2), Rational(2)}, Vector{Rational(0), Rational(0)}};
    CHECK_THROWS_AS(affine_dependence(pts), general_position_error);
}

TEST_CASE("affine dependence residuals are exactly zero on random instances") {
    oracle::Gen gen(23);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + static_cast<int>(gen.next() % 4);
        std::vector<Vector> pts;
        for (int i = 0; i < d + 2; ++i) pts.push_back(gen.vector(d));
        Vector lambda;
        try {
            lambda = affine_dependence(pts);
        } catch (const general_position_error&) {
            continue;   // degenerate random draw
        }
        Rational sum;
        Vector combo(d);
        for (int i = 0; i < d + 2; ++i) {
            sum += lambda[i];
            combo = combo + lambda[i] * pts[i];
        }
        CHECK(sum.is_zero());
        CHECK(combo.is_zero());
        CHECK(lambda[0].sign() == 1);
    }
}

TEST_CASE("wedge_to_vector on coordinate vectors") {
    Vector e1{Rational(1), Rational(0), Rational(0)};
    Vector e2{Rational(0), Rational(1), Rational(0)};
    Vector e3{Rational(0), Rational(0), Rational(1)};
    CHECK(wedge_to_vector({e1, e2}) == e3);
    Vector me3{Rational(0), Rational(0), Rational(-1)};
    CHECK(wedge_to_vector({e2, e1}) == me3);
}

TEST_CASE("wedge_to_vector matches the defining determinant (cofactor oracle)") {
    oracle::Gen gen(31);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 2 + static_cast<int>(gen.next() % 4);
        std::vector<Vector> vs;
        for (int i = 0; i < d - 1; ++i) vs.push_back(gen.vector(d));
        Vector u = wedge_to_vector(vs);
        // u . x == det(x | v_1 | ... | v_{d-1}) for random x, via the oracle
        Vector x = gen.vector(d);
        std::vector<Vector> cols = {x};
        for (const auto& v : vs) cols.push_back(v);
        CHECK(dot(u, x) == oracle::det_laplace(Matrix::from_columns(cols)));
        // orthogonality to each v_i
        for (const auto& v : vs) CHECK(dot(u, v).is_zero());
    }
}

TEST_CASE("wedge of dependent vectors is the zero vector, not an error") {
    Vector v{Rational(1), Rational(2), Rational(3)};
    Vector w{Rational(2), Rational(4), Rational(6)};
    CHECK(wedge_to_vector({v, w}).is_zero());
}

TEST_CASE("multivector wedge basics") {
    const int d = 5;
    auto blade = [&](std::initializer_list<int> idx) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t(1) << (i - 1);
        return Multivector::basis_blade(d, mask, 1);
    };
    CHECK(mv_wedge(blade({1, 2}), blade({3, 4})) == blade({1, 2, 3, 4}));
    CHECK(mv_wedge(blade({1, 2}), blade({2, 3})).is_zero());
    Multivector e2e1 = mv_wedge(blade({2}), blade({1}));
    CHECK(e2e1.coeff(0b11) == Rational(-1));
    CHECK_THROWS_AS(mv_wedge(blade({1, 2, 3}), blade({1, 4, 5})), invalid_argument_error);
}

TEST_CASE("mv_wedge graded anticommutativity on random pure grades") {
    oracle::Gen gen(41);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 4 + static_cast<int>(gen.next() % 3);
        int p = 1 + static_cast<int>(gen.next() % 2);
        int q = 1 + static_cast<int>(gen.next() % std::min<std::uint64_t>(2, d - p));
        Multivector a(d, p), b(d, q);
        // random sparse multivectors
        for (int k = 0; k < 3; ++k) {
            std::uint64_t mask = 0;
            while (std::popcount(mask) != p) mask = gen.next() & ((1ULL << d) - 1);
            a.add_term(mask, gen.rational(5, 3));
            mask = 0;
            while (std::popcount(mask) != q) mask = gen.next() & ((1ULL << d) - 1);
            b.add_term(mask, gen.rational(5, 3));
        }
        Multivector ab = mv_wedge(a, b);
        Multivector ba = mv_wedge(b, a);
        Rational sign = ((p * q) % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(ab == sign * ba);
    }
}

TEST_CASE("top pairing against the determinant") {
    const int d = 5;
    Vector e1(d), e2(d);
    e1[0] = 1;
    e2[1] = 1;
    std::uint64_t rest = ((1ULL << d) - 1) ^ 1ULL;   // e_{2..d}
    Multivector u = Multivector::basis_blade(d, rest, 1);
    CHECK(top_pairing(e1, u) == Rational(1));
    CHECK(top_pairing(e2, u) == Rational(0));

    oracle::Gen gen(53);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vector> vs;
        for (int i = 0; i < d - 1; ++i) vs.push_back(gen.vector(d));
        Multivector w = Multivector::from_vector(vs[0]);
        for (int i = 1; i < d - 1; ++i) w = mv_wedge(w, Multivector::from_vector(vs[i]));
        Vector a = gen.vector(d);
        std::vector<Vector> cols = {a};
        for (const auto& v : vs) cols.push_back(v);
        CHECK(top_pairing(a, w) == oracle::det_laplace(Matrix::from_columns(cols)));
    }
}
