#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqtype/rimatrix.hpp"
#include "seqtype/linalg.hpp"
#include "seqtype/combinatorics.hpp"
#include "support/oracles.hpp"

using namespace seqtype;

TEST_CASE("seeds and row restarts match the induction") {
    RIMatrix M = build_exact(3, 5, Rational(1, 512));
    CHECK(M.a[0][0] == 1);
    CHECK(M.a[0][1] == 2);
    for (int i = 1; i < M.D; ++i) CHECK(M.a[i][0] == M.a[i - 1][M.m - 1] + 1);
    CHECK(M.eta == Rational(1, 512) / Rational(6));
}

TEST_CASE("build_exact output passes every check exhaustively") {
    for (auto [D, m, q] : std::vector<std::tuple<int, int, long>>{{2, 3, 16}, {3, 5, 512}}) {
        Rational eps(1, q);
        RIMatrix M = build_exact(D, m, eps);
        RiVerifyReport rep = verify_ri(M, eps);
        CHECK(rep.all_pass());
        CHECK(rep.ri_sampling == "exhaustive");
        CHECK(check_diagonal_domination(M, M.eta).empty());
    }
}

TEST_CASE("the RI bound |det - P| <= (k!-1) eta P holds on every submatrix") {
    RIMatrix M = build_exact(3, 5, Rational(1, 512));
    for (int k = 2; k <= M.D; ++k) {
        for_each_combination(M.D, k, [&](const std::vector<int>& R) {
            for_each_combination(M.m, k, [&](const std::vector<int>& C) {
                Matrix sub(k, k);
                BigInt P = 1;
                for (int r = 0; r < k; ++r) {
                    for (int c = 0; c < k; ++c) sub.at(r, c) = Rational(M.a[R[r]][C[c]]);
                    P *= M.a[R[r]][C[r]];
                }
                Rational dv = oracle::det_laplace(sub);
                Rational diff = (dv - Rational(P)).abs();
                Rational bound = Rational(factorial(k) - 1) * M.eta * Rational(P);
                CHECK(diff <= bound);
            });
        });
    }
}

TEST_CASE("the eq-extra consequences hold") {
    RIMatrix M = build_exact(3, 5, Rational(1, 512));
    const Rational eps = M.epsilon;
    for (int i = 0; i < M.D; ++i) {
        for (int j = 1; j + 1 < M.m; ++j) {
            for (int J = 0; J < M.m; ++J) {
                Rational aij(M.a[i][j]), ajm1(M.a[i][j - 1]), ajp1(M.a[i][j + 1]), aJ(M.a[i][J]);
                if (J > j) CHECK(aij < eps * ajm1 * aJ);
                if (J < j) CHECK(aJ * aij < eps * ajp1);
            }
        }
    }
}

TEST_CASE("2x2 cross-diagonal dominance, exhaustive for a 4x8 instance") {
    RIMatrix M = build_exact(4, 8, Rational(1, 64));
    for (int I = 0; I < M.D; ++I)
        for (int i = I + 1; i < M.D; ++i)
            for (int J = 0; J < M.m; ++J)
                for (int j = J + 1; j < M.m; ++j)
                    CHECK(Rational(M.a[i][J] * M.a[I][j]) <
                          M.eta * Rational(M.a[I][J] * M.a[i][j]));
}

TEST_CASE("entries are minimal under the bound policy (2x3 instance)") {
    Rational eps(1, 16);
    RIMatrix M = build_exact(2, 3, eps);
    // decreasing any entry past the seeds must break a recorded constraint
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == 0 && j <= 1) continue;   // seeds 1 and 2
            RIMatrix dec = M;
            dec.a[i][j] -= 1;
            bool monotone_broken = false;
            if (j > 0 && !(dec.a[i][j] > dec.a[i][j - 1])) monotone_broken = true;
            if (j == 0 && i > 0 && !(dec.a[i][0] > dec.a[i - 1][M.m - 1])) monotone_broken = true;
            bool extra_broken = false;
            for (int jj = 1; jj + 1 < 3; ++jj)
                if (!(Rational(dec.a[i][jj - 1] * dec.a[i][jj]) < eps * Rational(dec.a[i][jj + 1])))
                    extra_broken = true;
            bool diag_broken = !check_diagonal_domination(dec, M.eta).empty();
            CHECK((monotone_broken || extra_broken || diag_broken));
        }
    }
}

TEST_CASE("verify_ri flags bad matrices with witnesses") {
    RIMatrix ones;
    ones.D = 3;
    ones.m = 4;
    ones.mode = RiMode::ExactInductive;
    ones.epsilon = Rational(1, 2);
    ones.eta = Rational(1, 12);
    ones.a.assign(3, std::vector<BigInt>(4, 1));
    RiVerifyReport rep = verify_ri(ones, Rational(1, 2));
    CHECK(!rep.monotonic.pass);
    CHECK(!rep.ri.pass);
    CHECK(!rep.monotonic.witness.empty());

    RIMatrix M = build_exact(3, 5, Rational(1, 512));
    M.a[0][2] = M.a[0][1] + 1;   // too small for the row-triple condition
    RiVerifyReport rep2 = verify_ri(M, Rational(1, 512));
    CHECK(!rep2.row_triple.pass);
    CHECK(rep2.row_triple.witness.find("row 1") != std::string::npos);
}

TEST_CASE("geometric template") {
    CHECK_THROWS_AS(build_geometric(2, 3, 1, 2), invalid_argument_error);
    CHECK_THROWS_AS(build_geometric(2, 3, 0, 5), invalid_argument_error);

    RIMatrix G = build_geometric(2, 3, 4, 4);
    CHECK(G.a[0][0] == 16);          // 2^(4*1)
    CHECK(G.a[0][2] == 4096);        // 2^(4*3)
    CHECK(G.a[1][0] == 65536);       // 2^(4*1*4)
    RiVerifyReport rep = verify_ri(G, Rational(1, 4));
    CHECK(rep.monotonic.pass);
    CHECK(rep.ri.pass);
    CHECK(rep.ri_sampling == "exhaustive");
    // the pure template cannot satisfy the row-triple condition
    CHECK(!rep.row_triple.pass);
}

TEST_CASE("guardrail refuses oversized builds with a prediction") {
    BuildOptions opts;
    opts.max_entry_bits = 2000;
    try {
        build_exact(3, 8, Rational(1, 512), opts);
        FAIL("expected guardrail refusal");
    } catch (const guardrail_error& e) {
        CHECK(e.predicted_bits > 2000);
    }
    // criterion sizes stay well inside the default budget
    CHECK(predict_entry_bits(3, 5, Rational(1, 512)) < 10'000'000);
    CHECK(predict_entry_bits(4, 6, Rational(1, 1024)) < 10'000'000);
    // the full-strength inductive construction explodes quickly
    CHECK(predict_entry_bits(10, 36, Rational(1, 512)) > 1e12);
}

TEST_CASE("sampled verification mode reports itself") {
    RIMatrix M = build_exact(4, 7, Rational(1, 64));
    VerifyOptions opts;
    opts.submatrix_cap = 50;
    opts.sample_count = 40;
    RiVerifyReport rep = verify_ri(M, Rational(1, 64), opts);
    CHECK(rep.ri_sampling == "sampled");
    CHECK(rep.all_pass());
    CHECK(rep.submatrices_checked > 40);
}
