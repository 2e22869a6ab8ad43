#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqtype/continuous.hpp"
#include "seqtype/lines.hpp"
#include "support/oracles.hpp"

using namespace seqtype;

namespace {

OrientedLine mkline(std::vector<Rational> a, std::vector<Rational> v) {
    OrientedLine l;
    l.a = Vector(std::move(a));
    l.v = Vector(std::move(v));
    l.d = l.a.dim();
    return l;
}

std::vector<OrientedLine> hyperboloid_samples(const std::vector<Rational>& ss) {
    std::vector<OrientedLine> lines;
    FamilySpec spec = hyperboloid_family();
    for (const auto& s : ss) lines.push_back(family_line(spec, s));
    return lines;
}

Rational direct_h(const std::vector<OrientedLine>& lines, int i) {
    std::vector<Vector> cols = {lines[i].a};
    for (const auto& l : lines) cols.push_back(l.v);
    return oracle::det_laplace(Matrix::from_columns(cols));
}

} // namespace

TEST_CASE("general position and tuple type, d=3 coordinate example") {
    auto l1 = mkline({Rational(0), Rational(0), Rational(0)},
                     {Rational(1), Rational(0), Rational(0)});
    auto l2 = mkline({Rational(0), Rational(0), Rational(1)},
                     {Rational(0), Rational(1), Rational(0)});
    TupleHValues hv = tuple_h_values({l1, l2});
    CHECK(hv.h[0] == Rational(0));
    CHECK(hv.h[1] == Rational(1));
    CHECK(line_general_position({l1, l2}));
    CHECK(tuple_type({l1, l2}) == Perm{1, 2});

    // two lines through the origin: h = (0, 0)
    auto l3 = mkline({Rational(0), Rational(0), Rational(0)},
                     {Rational(0), Rational(1), Rational(0)});
    CHECK(!line_general_position({l1, l3}));
    CHECK_THROWS_AS(tuple_type({l1, l3}), general_position_error);
}

TEST_CASE("tuple type is invariant under representative changes") {
    oracle::Gen gen(211);
    auto lines = hyperboloid_samples({Rational(-1, 2), Rational(1, 5)});
    Perm sigma = tuple_type(lines);
    for (int trial = 0; trial < 10; ++trial) {
        auto moved = lines;
        int which = static_cast<int>(gen.next() % 2);
        Rational alpha = gen.rational(7, 3);
        Rational beta = gen.positive_rational(7, 3);
        moved[which].a = moved[which].a + alpha * moved[which].v;
        moved[which].v = beta * moved[which].v;
        CHECK(tuple_type(moved) == sigma);
    }
    // the concrete instance from the contract: (a2, v2) -> (a2 + 2 v2, 3 v2)
    auto moved = lines;
    moved[1].a = moved[1].a + Rational(2) * moved[1].v;
    moved[1].v = Rational(3) * moved[1].v;
    CHECK(tuple_type(moved) == sigma);
}

TEST_CASE("hyperboloid tuples have type identity; h matches direct determinants") {
    auto lines = hyperboloid_samples({Rational(-1, 2), Rational(1, 5)});
    CHECK(tuple_type(lines) == Perm{1, 2});
    TupleHValues hv = tuple_h_values(lines);
    for (int i = 0; i < 2; ++i) CHECK(hv.h[i] == direct_h(lines, i));
}

TEST_CASE("sequence type: hyperboloid samples are homogeneous of type identity") {
    std::vector<Rational> ss;
    for (int k = 0; k < 5; ++k) ss.push_back(Rational(2 * k - 4, 5));
    auto lines = hyperboloid_samples(ss);
    auto sigma = sequence_type(lines, 3);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == Perm{1, 2});

    // d = 3 pair types are swap-invariant (reversing a pair flips both the
    // wedge and the labels, which cancel), so reordering cannot break
    // homogeneity here; the pair type is the linking sign of the two lines
    std::swap(lines[1], lines[3]);
    auto still = sequence_type(lines, 3);
    REQUIRE(still.has_value());
    CHECK(*still == Perm{1, 2});
}

TEST_CASE("swapping two lines destroys homogeneity once tuples are triples") {
    // generic identity-type family in d=4, sampled at 5 parameters
    FamilySpec gen4;
    gen4.d = 4;
    gen4.kind = FamilyKind::Generic;
    gen4.domain_lo = Rational(0);
    gen4.domain_hi = Rational(100);
    for (int i = 0; i < 4; ++i)
        gen4.coeffs.push_back(Polynomial{{Rational(i + 1), Rational(1)}});
    std::vector<OrientedLine> lines;
    for (int t = 1; t <= 5; ++t) lines.push_back(family_line(gen4, Rational(t)));
    auto sigma = sequence_type(lines, 4);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == Perm{1, 2, 3});

    std::swap(lines[1], lines[3]);
    CHECK(!sequence_type(lines, 4).has_value());
}

TEST_CASE("sequence type propagates general-position failures with indices") {
    auto l1 = mkline({Rational(0), Rational(0), Rational(0)},
                     {Rational(1), Rational(0), Rational(0)});
    auto l2 = mkline({Rational(0), Rational(0), Rational(1)},
                     {Rational(0), Rational(1), Rational(0)});
    auto l3 = mkline({Rational(0), Rational(0), Rational(0)},
                     {Rational(0), Rational(1), Rational(0)});   // degenerate with l1
    try {
        sequence_type({l1, l2, l3}, 3);
        FAIL("expected a general_position_error");
    } catch (const general_position_error& e) {
        CHECK(std::string(e.what()).find("1 3") != std::string::npos);
    }
}

TEST_CASE("d=4 general position matches a direct determinant oracle") {
    oracle::Gen gen(223);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<OrientedLine> lines;
        for (int i = 0; i < 3; ++i) {
            OrientedLine l;
            l.d = 4;
            l.a = gen.vector(4);
            do { l.v = gen.vector(4); } while (l.v.is_zero());
            lines.push_back(l);
        }
        std::vector<Rational> h;
        for (int i = 0; i < 3; ++i) h.push_back(direct_h(lines, i));
        bool distinct = h[0] != h[1] && h[0] != h[2] && h[1] != h[2];
        std::vector<Vector> vs = {lines[0].v, lines[1].v, lines[2].v};
        bool uok = !wedge_to_vector(vs).is_zero();
        CHECK(line_general_position(lines) == (distinct && uok));
        if (distinct && uok) {
            TupleHValues hv = tuple_h_values(lines);
            for (int i = 0; i < 3; ++i) CHECK(hv.h[i] == h[i]);
        }
    }
}

TEST_CASE("translation, positive maps, and global flips act on types as expected") {
    oracle::Gen gen(227);
    for (int d = 3; d <= 5; ++d) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<OrientedLine> lines;
            for (int i = 0; i < d - 1; ++i) {
                OrientedLine l;
                l.d = d;
                l.a = gen.vector(d);
                do { l.v = gen.vector(d); } while (l.v.is_zero());
                lines.push_back(l);
            }
            Perm sigma;
            try {
                sigma = tuple_type(lines);
            } catch (const general_position_error&) {
                continue;
            }

            // common translation
            Vector w = gen.vector(d);
            auto shifted = lines;
            for (auto& l : shifted) l.a = l.a + w;
            CHECK(tuple_type(shifted) == sigma);

            // global orientation flip: sign (-1)^(d-1) on every h
            auto flipped = lines;
            for (auto& l : flipped) l.v = Rational(-1) * l.v;
            CHECK(tuple_type(flipped) == (d % 2 == 1 ? sigma : reversed(sigma)));

            // linear map with known determinant sign
            Matrix T(d, d);
            Rational dT;
            do {
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) T.at(r, c) = gen.rational(3, 2);
                dT = det(T);
            } while (dT.is_zero());
            auto apply = [&](const Vector& x) {
                Vector y(d);
                for (int r = 0; r < d; ++r) {
                    Rational acc;
                    for (int c = 0; c < d; ++c) acc += T.at(r, c) * x[c];
                    y[r] = acc;
                }
                return y;
            };
            auto mapped = lines;
            for (auto& l : mapped) {
                l.a = apply(l.a);
                l.v = apply(l.v);
            }
            CHECK(tuple_type(mapped) == (dT.sign() > 0 ? sigma : reversed(sigma)));
        }
    }
}

TEST_CASE("unoriented profile: flip invariance and the direct oracle") {
    oracle::Gen gen(229);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 12; ++trial) {
        std::vector<OrientedLine> lines;
        for (int i = 0; i < 3; ++i) {
            OrientedLine l;
            l.d = 3;
            l.a = gen.vector(3);
            do { l.v = gen.vector(3); } while (l.v.is_zero());
            lines.push_back(l);
        }
        UnorientedTypeProfile prof;
        try {
            prof = unoriented_tuple_type(lines);
        } catch (const general_position_error&) {
            continue;
        }
        ++done;

        // flipping any one direction leaves the profile unchanged
        for (int flip = 0; flip < 3; ++flip) {
            auto flipped = lines;
            flipped[flip].v = Rational(-1) * flipped[flip].v;
            CHECK(unoriented_tuple_type(flipped) == prof);
        }

        // oracle: all six determinants computed directly
        for (int j = 0; j < 3; ++j) {
            std::vector<OrientedLine> rest;
            std::vector<int> ids;
            for (int i = 0; i < 3; ++i)
                if (i != j) { rest.push_back(lines[i]); ids.push_back(i); }
            std::vector<Rational> h;
            for (int i : ids) {
                std::vector<Vector> cols = {lines[i].a};
                for (int k2 = 0; k2 < 3; ++k2)
                    if (k2 != j) cols.push_back(lines[k2].v);
                h.push_back(oracle::det_laplace(Matrix::from_columns(cols)));
            }
            Perm sigma = h[0] < h[1] ? Perm{1, 2} : Perm{2, 1};
            Perm canon = std::min(sigma, reversed(sigma));
            CHECK(prof.pairs[j] == canon);
        }
    }
    CHECK(done >= 5);
}

TEST_CASE("reduce_profile") {
    UnorientedTypeProfile allsame{3, {{1, 2}, {1, 2}, {1, 2}}};
    auto r = reduce_profile(allsame);
    REQUIRE(r.has_value());
    CHECK(*r == Perm{1, 2});

    UnorientedTypeProfile mixed{3, {{1, 2}, {1, 2}, {2, 1}}};
    CHECK(!reduce_profile(mixed).has_value());
}

TEST_CASE("canonicalize preserves the type and normalizes the representative") {
    auto lines = hyperboloid_samples({Rational(-2, 5), Rational(1, 3)});
    Perm sigma = tuple_type(lines);
    std::vector<OrientedLine> canon;
    for (const auto& l : lines) canon.push_back(canonicalize_line(l));
    CHECK(tuple_type(canon) == sigma);
    for (const auto& l : canon) {
        CHECK(dot(l.a, l.v).is_zero());
        BigInt g = 0;
        for (int i = 0; i < l.d; ++i) {
            CHECK(l.v[i].is_integer());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.v[i].num_ptr());
        }
        CHECK(g == 1);
    }
    // canonicalizing twice is a no-op
    for (const auto& l : canon) {
        OrientedLine again = canonicalize_line(l);
        CHECK(again.a == l.a);
        CHECK(again.v == l.v);
    }
}

TEST_CASE("unoriented collapse also holds for sampled continuous families") {
    FamilySpec gen4;
    gen4.d = 4;
    gen4.kind = FamilyKind::Generic;
    gen4.domain_lo = Rational(0);
    gen4.domain_hi = Rational(100);
    for (int i = 0; i < 4; ++i)
        gen4.coeffs.push_back(Polynomial{{Rational(2 * i + 1), Rational(1), Rational(0), Rational(1, 7)}});
    std::vector<OrientedLine> lines;
    for (int t = 1; t <= 6; ++t) lines.push_back(family_line(gen4, Rational(t)));
    auto sigma = sequence_type(lines, 4);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == Perm{1, 2, 3});

    auto profile = unoriented_sequence_profile(lines, 4);
    REQUIRE(profile.has_value());
    auto pair = reduce_profile(*profile);
    REQUIRE(pair.has_value());
    CHECK(*pair == Perm{1, 2, 3});   // min of identity and its reverse
}
