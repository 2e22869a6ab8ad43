#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqtype/continuous.hpp"
#include "support/oracles.hpp"

using namespace seqtype;

namespace {

Rational power_det_oracle(const std::vector<Rational>& ts, const std::vector<int>& exps) {
    const int n = static_cast<int>(ts.size());
    Matrix m(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            Rational p = 1;
            for (int e = 0; e < exps[r]; ++e) p *= ts[c];
            m.at(r, c) = p;
        }
    return oracle::det_laplace(m);
}

} // namespace

TEST_CASE("principal Vandermondian") {
    CHECK(vandermonde({Rational(1), Rational(2), Rational(3)}) == Rational(2));
    CHECK_THROWS_AS(vandermonde({Rational(1), Rational(1)}), invalid_argument_error);
    CHECK_THROWS_AS(vandermonde({Rational(-1), Rational(2)}), invalid_argument_error);

    oracle::Gen gen(401);
    for (int trial = 0; trial < 20; ++trial) {
        int len = 2 + static_cast<int>(gen.next() % 4);
        auto ts = gen.increasing(len);
        std::vector<int> exps(len);
        for (int i = 0; i < len; ++i) exps[i] = i;
        CHECK(vandermonde(ts) == power_det_oracle(ts, exps));
    }
}

TEST_CASE("secondary Vandermondians and symmetric functions") {
    // d = 3, ts = (1, 2): V_1 = det [[1,1],[1,4]] = 3, E_1 = 3, V_0 = 1
    std::vector<Rational> ts = {Rational(1), Rational(2)};
    CHECK(secondary_vandermonde(ts, 1) == Rational(3));
    CHECK(elem_symmetric(ts, 1) == Rational(3));
    CHECK(vandermonde(ts) == Rational(1));

    CHECK(elem_symmetric(ts, 0) == Rational(1));
    CHECK_THROWS_AS(secondary_vandermonde(ts, 3), invalid_argument_error);
}

TEST_CASE("V_j = E_j V_0 exactly, d up to 7") {
    oracle::Gen gen(409);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 3 + static_cast<int>(gen.next() % 5);
        auto ts = gen.increasing(d - 1);
        Rational v0 = vandermonde(ts);
        for (int j = 1; j <= d - 1; ++j) {
            Rational vj = secondary_vandermonde(ts, j);
            CHECK(vj == elem_symmetric(ts, j) * v0);
            CHECK(vj.sign() == 1);
        }
    }
}

TEST_CASE("det_A equals the Vandermondian combination and is positive") {
    std::vector<Rational> ts = {Rational(1), Rational(2)};
    std::vector<Rational> a = {Rational(1), Rational(1), Rational(1)};
    CHECK(det_A(a, ts) == Rational(6));

    oracle::Gen gen(419);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + static_cast<int>(gen.next() % 5);
        auto ts = gen.increasing(d - 1);
        std::vector<Rational> coeff;
        for (int i = 0; i < d; ++i) coeff.push_back(gen.positive_rational(9, 4));
        Rational dA = det_A(coeff, ts);
        Rational sum;
        for (int i = 1; i <= d; ++i) {
            int j = d - i;
            Rational vj = (j == 0) ? vandermonde(ts) : secondary_vandermonde(ts, j);
            sum += coeff[i - 1] * vj;
        }
        CHECK(dA == sum);
        CHECK(dA.sign() == 1);
    }
    CHECK_THROWS_AS(det_A({Rational(-1), Rational(1)}, {Rational(1)}), invalid_argument_error);
}

TEST_CASE("family lines: generic and hyperboloid coordinates") {
    FamilySpec gen3;
    gen3.d = 3;
    gen3.kind = FamilyKind::Generic;
    gen3.domain_lo = Rational(0);
    gen3.domain_hi = Rational(100);
    for (int i = 0; i < 3; ++i) gen3.coeffs.push_back(Polynomial{{Rational(0), Rational(1)}});
    OrientedLine l = family_line(gen3, Rational(2));
    CHECK(l.a == Vector{Rational(2), Rational(-2), Rational(2)});
    CHECK(l.v == Vector{Rational(1), Rational(2), Rational(4)});

    FamilySpec hyp = hyperboloid_family();
    OrientedLine h0 = family_line(hyp, Rational(0));
    CHECK(h0.a == Vector{Rational(1), Rational(0), Rational(0)});
    CHECK(h0.v == Vector{Rational(0), Rational(-1), Rational(1)});
    OrientedLine hhalf = family_line(hyp, Rational(1, 2));
    CHECK(hhalf.a == Vector{Rational(3, 5), Rational(4, 5), Rational(0)});
    CHECK(hhalf.v == Vector{Rational(4, 5), Rational(-3, 5), Rational(1)});

    CHECK_THROWS_AS(family_line(hyp, Rational(2)), invalid_argument_error);
}

TEST_CASE("hyperboloid lines lie on x^2 + y^2 = z^2 + 1") {
    oracle::Gen gen(431);
    FamilySpec hyp = hyperboloid_family();
    for (int trial = 0; trial < 20; ++trial) {
        Rational s = Rational(gen.integer(-9, 9), 10);
        OrientedLine l = family_line(hyp, s);
        Rational tau = gen.rational(9, 4);
        Vector p = l.a + tau * l.v;
        CHECK(p[0] * p[0] + p[1] * p[1] == p[2] * p[2] + Rational(1));
    }
}

TEST_CASE("family type checks come out the identity") {
    FamilySpec gen4;
    gen4.d = 4;
    gen4.kind = FamilyKind::Generic;
    gen4.domain_lo = Rational(0);
    gen4.domain_hi = Rational(100);
    for (int i = 0; i < 4; ++i)
        gen4.coeffs.push_back(Polynomial{{Rational(i + 1), Rational(1)}});   // a_i(t) = t + i + 1
    std::vector<Rational> ts;
    for (int i = 1; i <= 5; ++i) ts.push_back(Rational(i));
    auto check = family_type_check(gen4, ts);
    REQUIRE(check.type.has_value());
    CHECK(*check.type == Perm{1, 2, 3});
    CHECK(check.coeffs_ok);

    FamilySpec hyp = hyperboloid_family();
    std::vector<Rational> ss;
    for (int i = 0; i < 6; ++i) ss.push_back(Rational(2 * i - 5, 7));
    auto check2 = family_type_check(hyp, ss);
    REQUIRE(check2.type.has_value());
    CHECK(*check2.type == Perm{1, 2});

    FamilySpec md = moment_direction_family(5);
    std::vector<Rational> ts5;
    for (int i = 1; i <= 6; ++i) ts5.push_back(Rational(i, 2));
    auto check3 = family_type_check(md, ts5);
    REQUIRE(check3.type.has_value());
    CHECK(*check3.type == Perm{1, 2, 3, 4});
}

TEST_CASE("violated coefficient positivity is reported, not raised") {
    // a_2(t) = -(2t+1) breaks positivity; the sampled sequence is still in
    // general position and comes out homogeneous of the reversed type
    FamilySpec bad;
    bad.d = 3;
    bad.kind = FamilyKind::Generic;
    bad.domain_lo = Rational(0);
    bad.domain_hi = Rational(100);
    bad.coeffs.push_back(Polynomial{{Rational(1), Rational(1)}});     // t + 1
    bad.coeffs.push_back(Polynomial{{Rational(-1), Rational(-2)}});   // -(2t + 1)
    bad.coeffs.push_back(Polynomial{{Rational(3), Rational(1)}});     // t + 3
    std::vector<Rational> ts = {Rational(1), Rational(2), Rational(3)};
    auto check = family_type_check(bad, ts);
    CHECK(!check.coeffs_ok);
    CHECK(!check.note.empty());
    REQUIRE(check.type.has_value());
    CHECK(*check.type == Perm{2, 1});
}
