#include "seqtype/rimatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqtype/combinatorics.hpp"
#include "seqtype/linalg.hpp"

namespace seqtype {

std::string ri_mode_str(RiMode m) {
    switch (m) {
    case RiMode::ExactInductive: return "exact-inductive";
    case RiMode::GeometricTemplate: return "geometric-template";
    case RiMode::TunedTemplate: return "tuned-template";
    }
    return "?";
}

RiMode ri_mode_parse(const std::string& s) {
    if (s == "exact-inductive") return RiMode::ExactInductive;
    if (s == "geometric-template") return RiMode::GeometricTemplate;
    if (s == "tuned-template") return RiMode::TunedTemplate;
    throw io_error("unknown RI matrix mode: '" + s + "'");
}

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

namespace {

std::int64_t bits_of(const BigInt& z) {
    if (mpz_sgn(z.get_mpz_t()) == 0) return 0;
    return static_cast<std::int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// smallest integer strictly greater than num/den (den > 0)
BigInt strictly_above(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q + 1;
}

void check_shape(int D, int m) {
    if (D < 1 || m <= D)
        throw invalid_argument_error("RI matrix needs m > D >= 1");
}

void check_epsilon(const Rational& epsilon) {
    if (!(Rational(0) < epsilon) || !(epsilon < Rational(1)))
        throw invalid_argument_error("epsilon must lie in (0,1)");
}

} // namespace

double predict_entry_bits(int D, int m, const Rational& epsilon) {
    // log-space shadow of the induction: seeds 0 and 1, row restarts at the
    // previous row end, the eta term at the second column, then the Fibonacci
    // step from the row-triple condition.
    const double ce = mpz_sizeinbase(epsilon.den_ptr(), 2) -
                      mpz_sizeinbase(epsilon.num_ptr(), 2) + 1;
    const double ceta = ce + mpz_sizeinbase(factorial(D).get_mpz_t(), 2);
    std::vector<double> prev(m), cur(m);
    double worst = 1;
    double gap2 = 1;   // running max of l(I,2) - l(I,1)
    for (int i = 0; i < D; ++i) {
        cur[0] = (i == 0) ? 0 : prev[m - 1];
        cur[1] = (i == 0) ? 1 : cur[0] + gap2 + ceta;
        gap2 = std::max(gap2, cur[1] - cur[0]);
        for (int j = 2; j < m; ++j)
            cur[j] = cur[j - 1] + cur[j - 2] + ce;
        worst = std::max(worst, cur[m - 1]);
        std::swap(prev, cur);
    }
    return worst;
}

RIMatrix build_exact(int D, int m, const Rational& epsilon, const BuildOptions& opts) {
    check_shape(D, m);
    check_epsilon(epsilon);

    const double predicted = predict_entry_bits(D, m, epsilon);
    if (predicted > static_cast<double>(opts.max_entry_bits))
        throw guardrail_error(
            "refusing to build: predicted entry size of about " +
                std::to_string(static_cast<long long>(predicted)) +
                " bits exceeds the budget of " + std::to_string(opts.max_entry_bits),
            predicted);

    RIMatrix M;
    M.D = D;
    M.m = m;
    M.epsilon = epsilon;
    M.eta = epsilon / Rational(factorial(D));
    M.mode = RiMode::ExactInductive;
    M.a.assign(D, std::vector<BigInt>(m));

    const BigInt eps_num = epsilon.num();
    const BigInt eps_den = epsilon.den();
    const BigInt eta_num = M.eta.num();
    const BigInt eta_den = M.eta.den();

    std::vector<std::vector<std::int64_t>> bits(D, std::vector<std::int64_t>(m, 0));

    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < m; ++j) {
            BigInt best = 1;   // entries are at least 1

            if (j == 0) {
                if (i > 0) best = M.a[i - 1][m - 1] + 1;
            } else {
                best = std::max(best, BigInt(M.a[i][j - 1] + 1));
            }

            // row-triple condition a(i,j-2) a(i,j-1) < eps a(i,j)
            if (j >= 2) {
                BigInt num = M.a[i][j - 1] * M.a[i][j - 2] * eps_den;
                best = std::max(best, strictly_above(num, eps_num));
            }

            // diagonal domination for submatrices whose bottom-right is (i,j)
            if (i >= 1 && j >= 1) {
                const int kmax = std::min(i, j);
                std::uint64_t count = 0;
                for (int k2 = 1; k2 <= kmax; ++k2) {
                    std::uint64_t perms = 1;
                    for (int x = 2; x <= k2 + 1; ++x) perms *= x;   // (k2+1)!
                    std::uint64_t movers = perms - perms / (k2 + 1); // minus k2!
                    count += binomial_capped(i, k2, opts.per_entry_cap) *
                             binomial_capped(j, k2, opts.per_entry_cap) * movers;
                    if (count > opts.per_entry_cap) break;
                }

                if (count > opts.per_entry_cap) {
                    // conservative closed bound: any diagonal avoiding (i,j)
                    // multiplies at most a(i,j-1) and one entry <= a(r,m-1)
                    // per earlier row, while eta P >= eta a(i,j)
                    BigInt num = M.a[i][j - 1];
                    for (int r = 0; r < i; ++r) num *= M.a[r][m - 1];
                    num *= eta_den;
                    best = std::max(best, strictly_above(num, eta_num));
                } else {
                    // exact maximum over all (submatrix, diagonal) pairs,
                    // pruned by bit-length scores
                    std::int64_t best_score = INT64_MIN;
                    auto enumerate = [&](auto&& visit) {
                        for (int k2 = 1; k2 <= kmax; ++k2) {
                            for_each_combination(i, k2, [&](const std::vector<int>& R) {
                                for_each_combination(j, k2, [&](const std::vector<int>& C) {
                                    std::vector<int> tau(k2 + 1);
                                    std::iota(tau.begin(), tau.end(), 0);
                                    do {
                                        if (tau[k2] == k2) continue;
                                        visit(R, C, tau);
                                    } while (std::next_permutation(tau.begin(), tau.end()));
                                });
                            });
                        }
                    };
                    auto score_of = [&](const std::vector<int>& R, const std::vector<int>& C,
                                        const std::vector<int>& tau) {
                        const int k2 = static_cast<int>(R.size());
                        auto row_of = [&](int l) { return l < k2 ? R[l] : i; };
                        auto col_of = [&](int l) { return l < k2 ? C[l] : j; };
                        std::int64_t s = 0;
                        for (int l = 0; l <= k2; ++l)
                            s += bits[row_of(l)][col_of(tau[l])];
                        for (int l = 0; l < k2; ++l) s -= bits[R[l]][C[l]];
                        return s;
                    };
                    enumerate([&](const std::vector<int>& R, const std::vector<int>& C,
                                  const std::vector<int>& tau) {
                        best_score = std::max(best_score, score_of(R, C, tau));
                    });
                    const std::int64_t slack = 2 * (kmax + 1) + 4;
                    const std::int64_t eta_bits =
                        bits_of(eta_den) - bits_of(eta_num) + 2;
                    enumerate([&](const std::vector<int>& R, const std::vector<int>& C,
                                  const std::vector<int>& tau) {
                        std::int64_t score = score_of(R, C, tau);
                        if (score < best_score - slack) return;
                        // certified upper bound on the candidate's bit length;
                        // skip the exact product when it cannot beat the bound
                        // already in hand (usually the row-triple one)
                        const int k2 = static_cast<int>(R.size());
                        if (score + k2 + eta_bits + 2 < bits_of(best)) return;
                        auto row_of = [&](int l) { return l < k2 ? R[l] : i; };
                        auto col_of = [&](int l) { return l < k2 ? C[l] : j; };
                        BigInt num = eta_den;
                        for (int l = 0; l <= k2; ++l)
                            num *= M.a[row_of(l)][col_of(tau[l])];
                        BigInt den = eta_num;
                        for (int l = 0; l < k2; ++l) den *= M.a[R[l]][C[l]];
                        best = std::max(best, strictly_above(num, den));
                    });
                }
            }

            M.a[i][j] = best;
            bits[i][j] = bits_of(best);
            if (bits[i][j] > opts.max_entry_bits)
                throw guardrail_error(
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") reached " + std::to_string(bits[i][j]) +
                        " bits, over the budget of " + std::to_string(opts.max_entry_bits),
                    static_cast<double>(bits[i][j]));
        }
    }
    return M;
}

RIMatrix build_geometric(int D, int m, int s, int t, std::int64_t max_entry_bits) {
    check_shape(D, m);
    if (s < 1 || t < 2) throw invalid_argument_error("need s >= 1 and t >= 2");
    if (t <= m)
        throw invalid_argument_error(
            "geometric template needs t > m for row-major monotonicity");

    // largest exponent is s * m * t^(D-1)
    long double worst = static_cast<long double>(s) * m * std::pow((long double)t, D - 1);
    if (worst > static_cast<long double>(max_entry_bits))
        throw guardrail_error("geometric exponent exceeds the bit budget",
                              static_cast<double>(worst));

    RIMatrix M;
    M.D = D;
    M.m = m;
    M.mode = RiMode::GeometricTemplate;
    M.a.assign(D, std::vector<BigInt>(m));
    std::uint64_t rowpow = 1;
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < m; ++j) {
            std::uint64_t e = static_cast<std::uint64_t>(s) * (j + 1) * rowpow;
            mpz_ui_pow_ui(M.a[i][j].get_mpz_t(), 2, e);
        }
        rowpow *= static_cast<std::uint64_t>(t);
    }

    // certified 2x2 ratio bound; informational only
    BigInt certden = 1;
    mpz_mul_2exp(certden.get_mpz_t(), certden.get_mpz_t(),
                 static_cast<unsigned long>(s) * (t - 1));
    Rational cert = Rational(factorial(D) - 1, certden);
    M.epsilon = (cert < Rational(1)) ? cert : Rational(1, 2);
    M.eta = M.epsilon / Rational(factorial(D));
    return M;
}

namespace {

// |det(sub) - P| < eps P for the submatrix of M given by rows R, cols C
bool ri_holds(const RIMatrix& M, const std::vector<int>& R, const std::vector<int>& C,
              const BigInt& eps_num, const BigInt& eps_den) {
    const int k = static_cast<int>(R.size());
    IntMatrix sub(k, std::vector<BigInt>(k));
    BigInt P = 1;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) sub[r][c] = M.a[R[r]][C[c]];
        P *= M.a[R[r]][C[r]];
    }
    BigInt dv = det_int(std::move(sub));
    BigInt diff = dv - P;
    mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
    return diff * eps_den < eps_num * P;
}

std::string subm_witness(const std::vector<int>& R, const std::vector<int>& C) {
    std::string w = "rows {";
    for (size_t x = 0; x < R.size(); ++x) w += (x ? "," : "") + std::to_string(R[x] + 1);
    w += "} cols {";
    for (size_t x = 0; x < C.size(); ++x) w += (x ? "," : "") + std::to_string(C[x] + 1);
    return w + "}";
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RiVerifyReport verify_ri(const RIMatrix& M, const Rational& epsilon,
                         const VerifyOptions& opts) {
    check_epsilon(epsilon);
    RiVerifyReport rep;
    const int D = M.D, m = M.m;
    const BigInt eps_num = epsilon.num();
    const BigInt eps_den = epsilon.den();

    // monotonicity along rows and across row restarts, all entries >= 1
    for (int i = 0; i < D && rep.monotonic.pass; ++i) {
        for (int j = 0; j < m; ++j) {
            bool ok = M.a[i][j] >= 1;
            if (ok && j > 0) ok = M.a[i][j] > M.a[i][j - 1];
            if (ok && j == 0 && i > 0) ok = M.a[i][0] > M.a[i - 1][m - 1];
            if (!ok) {
                rep.monotonic.pass = false;
                rep.monotonic.witness =
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                break;
            }
        }
    }

    // a(i,j-1) a(i,j) < eps a(i,j+1)
    for (int i = 0; i < D && rep.row_triple.pass; ++i) {
        for (int j = 1; j + 1 < m; ++j) {
            if (!(M.a[i][j - 1] * M.a[i][j] * eps_den < eps_num * M.a[i][j + 1])) {
                rep.row_triple.pass = false;
                rep.row_triple.witness =
                    "row " + std::to_string(i + 1) + ", columns " + std::to_string(j) +
                    ".." + std::to_string(j + 2);
                break;
            }
        }
    }

    // det M* = (1 +- eps) P over square submatrices
    std::uint64_t total = 0;
    for (int k = 2; k <= D; ++k)
        total += binomial_capped(D, k, opts.submatrix_cap) *
                 binomial_capped(m, k, opts.submatrix_cap);
    const bool exhaustive = total <= opts.submatrix_cap;
    rep.ri_sampling = exhaustive ? "exhaustive" : "sampled";

    auto check_one = [&](const std::vector<int>& R, const std::vector<int>& C) {
        ++rep.submatrices_checked;
        if (!ri_holds(M, R, C, eps_num, eps_den)) {
            if (rep.ri.pass) {
                rep.ri.pass = false;
                rep.ri.witness = subm_witness(R, C);
            }
        }
    };

    if (exhaustive) {
        for (int k = 2; k <= D; ++k)
            for_each_combination(D, k, [&](const std::vector<int>& R) {
                for_each_combination(m, k, [&](const std::vector<int>& C) {
                    if (rep.ri.pass) check_one(R, C);
                });
            });
    } else {
        for (int k = 2; k <= std::min(3, D); ++k)
            for_each_combination(D, k, [&](const std::vector<int>& R) {
                for_each_combination(m, k, [&](const std::vector<int>& C) {
                    if (rep.ri.pass) check_one(R, C);
                });
            });
        std::uint64_t state = opts.seed;
        for (std::uint64_t s = 0; s < opts.sample_count && rep.ri.pass; ++s) {
            int k = 4 + static_cast<int>(splitmix64(state) % std::max(1, D - 3));
            if (k > D) k = D;
            auto draw = [&](int nn, int kk) {
                std::vector<int> pool(nn);
                std::iota(pool.begin(), pool.end(), 0);
                std::vector<int> out;
                for (int x = 0; x < kk; ++x) {
                    int pick = static_cast<int>(splitmix64(state) % pool.size());
                    out.push_back(pool[pick]);
                    pool.erase(pool.begin() + pick);
                }
                std::sort(out.begin(), out.end());
                return out;
            };
            check_one(draw(D, k), draw(m, k));
        }
    }
    return rep;
}

std::string check_diagonal_domination(const RIMatrix& M, const Rational& eta) {
    const BigInt eta_num = eta.num();
    const BigInt eta_den = eta.den();
    std::string witness;
    for (int k = 2; k <= M.D && witness.empty(); ++k) {
        for_each_combination(M.D, k, [&](const std::vector<int>& R) {
            for_each_combination(M.m, k, [&](const std::vector<int>& C) {
                if (!witness.empty()) return;
                BigInt P = 1;
                for (int l = 0; l < k; ++l) P *= M.a[R[l]][C[l]];
                std::vector<int> tau(k);
                std::iota(tau.begin(), tau.end(), 0);
                while (std::next_permutation(tau.begin(), tau.end())) {
                    BigInt prod = 1;
                    for (int l = 0; l < k; ++l) prod *= M.a[R[l]][C[tau[l]]];
                    if (!(prod * eta_den < eta_num * P)) {
                        witness = subm_witness(R, C);
                        return;
                    }
                }
            });
        });
    }
    return witness;
}

} // namespace seqtype
