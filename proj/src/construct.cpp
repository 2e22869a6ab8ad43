#include "seqtype/construct.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "seqtype/combinatorics.hpp"

namespace seqtype {

Perm stacked_permutation(const StackedSpec& spec) {
    if (spec.d < 3) throw invalid_argument_error("stacked specs need d >= 3");
    if (static_cast<int>(spec.right.size()) != spec.d - 2)
        throw invalid_argument_error("stacked spec needs d-2 end choices");
    std::deque<int> seq;
    if (spec.family == StackedFamily::Ascending) {
        seq.push_back(1);
        for (int v = 2; v <= spec.d - 1; ++v) {
            if (spec.right[v - 2]) seq.push_back(v);
            else seq.push_front(v);
        }
    } else {
        seq.push_back(spec.d - 1);
        for (int k = 0; k < spec.d - 2; ++k) {
            int v = spec.d - 2 - k;
            if (spec.right[k]) seq.push_back(v);
            else seq.push_front(v);
        }
    }
    return Perm(seq.begin(), seq.end());
}

namespace {

// ascending insertion leaves a strictly-decreasing-then-increasing value
// sequence (valley at 1); descending insertion leaves a peak at d-1
bool is_valley(const Perm& p) {
    size_t i = 0;
    while (i + 1 < p.size() && p[i] > p[i + 1]) ++i;
    while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
    return i + 1 == p.size();
}

bool is_peak(const Perm& p) {
    size_t i = 0;
    while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
    while (i + 1 < p.size() && p[i] > p[i + 1]) ++i;
    return i + 1 == p.size();
}

} // namespace

bool is_two_sided_stacked(const Perm& sigma) {
    if (!is_permutation(sigma)) throw invalid_argument_error("not a permutation");
    if (sigma.size() < 2) return false;   // d >= 3
    return is_valley(sigma) || is_peak(sigma);
}

std::vector<Perm> enumerate_stacked(int d) {
    if (d < 3) throw invalid_argument_error("stacked enumeration needs d >= 3");
    std::set<Perm> out;
    for (int fam = 0; fam < 2; ++fam) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (d - 2)); ++mask) {
            StackedSpec spec;
            spec.d = d;
            spec.family = fam == 0 ? StackedFamily::Ascending : StackedFamily::Descending;
            spec.right.resize(d - 2);
            for (int k = 0; k < d - 2; ++k) spec.right[k] = (mask >> k) & 1;
            out.insert(stacked_permutation(spec));
        }
    }
    return std::vector<Perm>(out.begin(), out.end());
}

StackedSpec stacked_spec_parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw io_error("stacked spec must look like 'asc:RRL' or 'desc:LR'");
    std::string fam = s.substr(0, colon);
    std::string ends = s.substr(colon + 1);
    StackedSpec spec;
    if (fam == "asc") spec.family = StackedFamily::Ascending;
    else if (fam == "desc") spec.family = StackedFamily::Descending;
    else throw io_error("stacked family must be 'asc' or 'desc'");
    spec.d = static_cast<int>(ends.size()) + 2;
    if (spec.d < 3) throw io_error("stacked spec needs at least one end choice");
    for (char c : ends) {
        if (c == 'R' || c == 'r') spec.right.push_back(true);
        else if (c == 'L' || c == 'l') spec.right.push_back(false);
        else throw io_error("stacked spec ends must be 'L' or 'R'");
    }
    return spec;
}

std::string stacked_spec_str(const StackedSpec& spec) {
    std::string s = spec.family == StackedFamily::Ascending ? "asc:" : "desc:";
    for (bool r : spec.right) s += r ? 'R' : 'L';
    return s;
}

std::string construct_mode_str(ConstructMode m) {
    return m == ConstructMode::ExactRi ? "exact-ri" : "tuned";
}

ConstructMode construct_mode_parse(const std::string& s) {
    if (s == "exact-ri") return ConstructMode::ExactRi;
    if (s == "tuned") return ConstructMode::Tuned;
    throw io_error("construct mode must be 'exact-ri' or 'tuned'");
}

Perm reversed_sequence_type(const Perm& sigma, int d) {
    // Reversing the line order complements the position labels; reversing the
    // wedge factor order flips u by (-1)^((d-1)(d-2)/2), which reverses the
    // reading order when negative.
    Perm out(sigma.size());
    for (size_t r = 0; r < sigma.size(); ++r) out[r] = d - sigma[r];
    bool flip = (((d - 1) * (d - 2) / 2) % 2) != 0;
    if (flip) out = reversed(out);
    return out;
}

namespace {

struct Grid {
    // v-row l (1-based) is matrix row 2l-1; B-row l is matrix row 2l.
    const RIMatrix& M;
    int d;
    const BigInt& v_entry(int l, int col) const { return M.a[2 * (l - 1)][col]; }
    const BigInt& b_entry(int l, int col) const { return M.a[2 * l - 1][col]; }
};

// suffix products [b_c]_j = prod_{l=d+1-j..d} B_l(c), j = 1..d
std::vector<BigInt> b_vector(const Grid& g, int col) {
    std::vector<BigInt> b(g.d + 1);
    b[0] = 1;
    for (int j = 1; j <= g.d; ++j) b[j] = b[j - 1] * g.b_entry(g.d + 1 - j, col);
    return b;
}

Vector v_column(const Grid& g, int col) {
    Vector v(g.d);
    for (int l = 1; l <= g.d; ++l) v[l - 1] = Rational(g.v_entry(l, col));
    return v;
}

std::vector<int> delta_for(const StackedSpec& spec) {
    const int d = spec.d;
    std::vector<int> delta(d + 1, 1);   // 1-based
    for (int i = 2; i <= d - 1; ++i) {
        int want = spec.right[i - 2] ? 1 : -1;
        int sign = (i % 2 == 1) ? 1 : -1;   // (-1)^(i-1)
        delta[d + 1 - i] = sign * want;
    }
    return delta;
}

// a_c = gamma * sum_j delta_j [b_c]_j v_(c-j), evaluated per component in
// Horner form over the B-suffix products so the largest B entry multiplies
// the accumulated sum exactly once:
//   sum_j delta_j (prod_{r=d+1-j..d} B_r) v(c-j)
//     = B_d (delta_1 v(c-1) + B_{d-1} (delta_2 v(c-2) + ... B_1 delta_d v(c-d)))
Vector a_vector(const Grid& g, int col, const std::vector<int>& delta,
                const BigInt& gamma) {
    const int d = g.d;
    Vector a(d);
    for (int l = 1; l <= d; ++l) {
        BigInt acc = g.v_entry(l, col - d);
        if (delta[d] < 0) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        for (int r = 1; r <= d - 1; ++r) {
            acc *= g.b_entry(r, col);
            const BigInt& v = g.v_entry(l, col - (d - r));
            if (delta[d - r] > 0) acc += v;
            else acc -= v;
        }
        acc *= g.b_entry(d, col);
        if (gamma != 1) acc *= gamma;
        a[l - 1] = Rational(acc);
    }
    return a;
}

// Tuned power-of-two template. The v-rows carry linearly growing slopes with
// gaps of m + 3*margin, which keeps every relevant determinant within a
// 2^-margin neighborhood of its main-diagonal product; the B-rows stay small
// with values pinned just above the matching v-slope, which makes the term
// ladder T_j rise to the peak j = d+1-i and fall afterwards, each step by a
// factor beyond 2^margin. Row-major monotonicity of a genuine RI matrix is
// deliberately given up; exact verification of the finished sequence carries
// the correctness burden.
RIMatrix tuned_matrix(int d, int m, int margin) {
    RIMatrix M;
    M.D = 2 * d;
    M.m = m;
    M.mode = RiMode::TunedTemplate;
    M.epsilon = Rational(1, 2) / pow2(margin - 1);   // 2^-margin
    M.eta = M.epsilon / Rational(factorial(2 * d));
    M.a.assign(2 * d, std::vector<BigInt>(m));
    std::vector<std::int64_t> sv(d + 1), ab(d + 1);
    sv[1] = margin;
    for (int l = 2; l <= d; ++l) sv[l] = sv[l - 1] + m + 3 * margin;
    for (int l = 1; l <= d; ++l) ab[l] = sv[l] + margin;
    if (static_cast<std::int64_t>(m) * sv[d] > (std::int64_t(1) << 33))
        throw guardrail_error("tuned template exponents exceed the size budget",
                              static_cast<double>(m) * sv[d]);
    for (int l = 1; l <= d; ++l) {
        for (int c = 1; c <= m; ++c) {
            mpz_ui_pow_ui(M.a[2 * (l - 1)][c - 1].get_mpz_t(), 2,
                          static_cast<unsigned long>(c * sv[l]));
            mpz_ui_pow_ui(M.a[2 * l - 1][c - 1].get_mpz_t(), 2,
                          static_cast<unsigned long>(ab[l] + c));
        }
    }
    return M;
}

std::int64_t tuned_gamma_step(int d, int m, int margin) {
    std::vector<std::int64_t> sv(d + 1), ab(d + 1);
    sv[1] = margin;
    for (int l = 2; l <= d; ++l) sv[l] = sv[l - 1] + m + 3 * margin;
    for (int l = 1; l <= d; ++l) ab[l] = sv[l] + margin;
    std::int64_t bound = 0;
    for (int l = 1; l <= d; ++l) bound += static_cast<std::int64_t>(m) * sv[l];
    for (int l = 1; l <= d; ++l) bound += ab[l] + m;
    bound += static_cast<std::int64_t>(m) * sv[d];
    return bound + 2 * margin + 8;
}

// gamma for exact-ri mode, by enumerating the finite bound sets of the
// recursion: gamma_x large enough that every determinant magnitude a line
// y < x can produce stays a factor eps/10 below every magnitude line x
// produces.
std::vector<BigInt> exact_gammas(const Grid& g, int d, int n,
                                 const std::vector<std::vector<BigInt>>& bvecs,
                                 const Rational& eps) {
    const int dm1 = d - 1;
    std::vector<BigInt> gammas(n + 1);
    gammas[1] = 1;

    auto col_of = [&](int x) { return x * (d + 1) - 1; };

    // magnitude skeleton P * [b]_{d+1-i} * v_i(c - (d+1-i)) for line x at
    // position i within subset S
    auto skeleton = [&](const std::vector<int>& S, int pos_in_S) {
        BigInt P = 1;
        for (int l = 0; l < dm1; ++l) {
            if (l == pos_in_S) continue;
            P *= g.v_entry(l + 1, col_of(S[l]));
        }
        const int x = S[pos_in_S];
        const int i = pos_in_S + 1;
        const int j = d + 1 - i;
        BigInt t = bvecs[x][j] * g.v_entry(i, col_of(x) - j);
        return BigInt(P * t);
    };

    for (int x = 2; x <= n; ++x) {
        BigInt minZ, maxV;
        bool z_set = false, v_set = false;
        for_each_combination(n, dm1, [&](const std::vector<int>& idx) {
            std::vector<int> S(idx.size());
            for (size_t l = 0; l < idx.size(); ++l) S[l] = idx[l] + 1;
            for (int p = 0; p < dm1; ++p) {
                if (S[p] == x) {
                    BigInt z = skeleton(S, p);
                    if (!z_set || z < minZ) { minZ = z; z_set = true; }
                } else if (S[p] < x) {
                    BigInt v = skeleton(S, p) * gammas[S[p]];
                    if (!v_set || v > maxV) { maxV = v; v_set = true; }
                }
            }
        });
        if (!z_set || !v_set)
            throw verification_error("gamma recursion found no bound sets");
        // gamma_x > 11 maxV / (eps minZ); the 11 absorbs the (1 +- (d+1)eps)
        // factors on both sides
        BigInt num = 11 * maxV * eps.den();
        BigInt den = eps.num() * minZ;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        gammas[x] = q + 1;
        if (gammas[x] < 1) gammas[x] = 1;
    }
    return gammas;
}

// names the first index-ordered tuple whose type disagrees with the target
std::string first_mismatch(const std::vector<OrientedLine>& lines, int d,
                           const Perm& target) {
    std::string out = "no mismatching tuple found";
    bool done = false;
    for_each_combination(static_cast<int>(lines.size()), d - 1,
                         [&](const std::vector<int>& idx) {
        if (done) return;
        std::vector<OrientedLine> tuple;
        for (int i : idx) tuple.push_back(lines[i]);
        std::string got;
        try {
            Perm sigma = tuple_type(tuple);
            if (sigma == target) return;
            got = "type " + perm_str(sigma);
        } catch (const general_position_error&) {
            got = "a general-position violation";
        }
        out = "tuple (";
        for (size_t k = 0; k < idx.size(); ++k)
            out += (k ? " " : "") + std::to_string(idx[k] + 1);
        out += ") has " + got;
        done = true;
    });
    return out;
}

UniversalLineSequence build_ascending(int d, int n, const StackedSpec& spec,
                                      const ConstructOptions& opts) {
    const int m = n * (d + 1);
    UniversalLineSequence seq;
    seq.d = d;
    seq.n = n;
    seq.spec = spec;
    seq.mode = opts.mode;

    const Perm target = stacked_permutation(spec);
    std::vector<int> delta = delta_for(spec);

    int margin = opts.margin;
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        RIMatrix M;
        std::vector<BigInt> gammas(n + 1);
        if (opts.mode == ConstructMode::ExactRi) {
            Rational eps = Rational(1, 100L * (d + 1));   // eps < 1/(K(d+1)), K = 100
            BuildOptions bo;
            bo.max_entry_bits = opts.max_entry_bits;
            M = build_exact(2 * d, m, eps, bo);
            Grid g{M, d};
            std::vector<std::vector<BigInt>> bvecs(n + 1);
            for (int x = 1; x <= n; ++x) bvecs[x] = b_vector(g, x * (d + 1) - 1);
            gammas = exact_gammas(g, d, n, bvecs, eps);
            seq.matrix = std::move(M);
            Grid g2{seq.matrix, d};
            seq.lines.clear();
            for (int x = 1; x <= n; ++x) {
                int col = x * (d + 1) - 1;
                OrientedLine line;
                line.d = d;
                line.v = v_column(g2, col);
                line.a = a_vector(g2, col, delta, gammas[x]);
                seq.lines.push_back(std::move(line));
            }
        } else {
            M = tuned_matrix(d, m, margin);
            std::int64_t gstep = tuned_gamma_step(d, m, margin);
            if (gstep * (n - 1) > (std::int64_t(1) << 33))
                throw guardrail_error("tuned gamma exponents exceed the size budget",
                                      static_cast<double>(gstep) * (n - 1));
            for (int x = 1; x <= n; ++x) {
                gammas[x] = 1;
                mpz_mul_2exp(gammas[x].get_mpz_t(), gammas[x].get_mpz_t(),
                             static_cast<unsigned long>(gstep) * (x - 1));
            }
            seq.matrix = std::move(M);
            Grid g2{seq.matrix, d};
            seq.lines.clear();
            for (int x = 1; x <= n; ++x) {
                int col = x * (d + 1) - 1;
                OrientedLine line;
                line.d = d;
                line.v = v_column(g2, col);
                line.a = a_vector(g2, col, delta, gammas[x]);
                seq.lines.push_back(std::move(line));
            }
        }
        seq.delta.assign(delta.begin() + 1, delta.end());
        seq.gammas.assign(gammas.begin() + 1, gammas.end());
        seq.margin = margin;

        std::optional<Perm> got = sequence_type(seq.lines, d);
        if (got && *got == target) {
            seq.verified = true;
            seq.type = target;
            return seq;
        }
        if (opts.mode == ConstructMode::ExactRi)
            throw verification_error(
                "exact-ri construction failed verification for spec " +
                stacked_spec_str(spec) + ": " + first_mismatch(seq.lines, d, target));
        margin *= 2;
        if (attempt == opts.retries)
            throw verification_error("tuned construction failed verification for spec " +
                                     stacked_spec_str(spec) + " after " +
                                     std::to_string(opts.retries) + " retries: " +
                                     first_mismatch(seq.lines, d, target));
    }
    throw verification_error("unreachable");
}

} // namespace

UniversalLineSequence build_universal_lines(int d, int n, const StackedSpec& spec,
                                            const ConstructOptions& opts) {
    if (d < 3) throw invalid_argument_error("construction needs d >= 3");
    if (n < d - 1) throw invalid_argument_error("construction needs n >= d-1");
    if (spec.d != d) throw invalid_argument_error("spec dimension mismatch");
    if (static_cast<int>(spec.right.size()) != d - 2)
        throw invalid_argument_error("spec needs d-2 end choices");

    if (spec.family == StackedFamily::Ascending) return build_ascending(d, n, spec, opts);

    // Descending specs: find the ascending mirror whose reversed sequence
    // realizes the target, build it, reverse, and re-verify.
    const Perm target = stacked_permutation(spec);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (d - 2)); ++mask) {
        StackedSpec mirror;
        mirror.d = d;
        mirror.family = StackedFamily::Ascending;
        mirror.right.resize(d - 2);
        for (int k = 0; k < d - 2; ++k) mirror.right[k] = (mask >> k) & 1;
        if (reversed_sequence_type(stacked_permutation(mirror), d) != target) continue;

        UniversalLineSequence seq = build_ascending(d, n, mirror, opts);
        std::reverse(seq.lines.begin(), seq.lines.end());
        seq.spec = spec;
        seq.mirrored = true;
        seq.verified = false;
        std::optional<Perm> got = sequence_type(seq.lines, d);
        if (!got || *got != target)
            throw verification_error(
                "reversed mirror failed verification for spec " + stacked_spec_str(spec));
        seq.verified = true;
        seq.type = target;
        return seq;
    }
    throw verification_error("no ascending mirror realizes spec " + stacked_spec_str(spec));
}

DominanceReport dominance_report(const UniversalLineSequence& seq,
                                 const std::vector<int>& tuple) {
    const int d = seq.d;
    if (static_cast<int>(tuple.size()) != d - 1)
        throw invalid_argument_error("dominance tuple needs d-1 line indices");
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 1 || tuple[i] > seq.n)
            throw invalid_argument_error("tuple index out of range");
        if (i > 0 && tuple[i - 1] >= tuple[i])
            throw invalid_argument_error("tuple indices must increase");
    }
    if (!seq.verified) throw invalid_argument_error("dominance audit needs a verified sequence");

    Grid g{seq.matrix, d};
    DominanceReport rep;
    rep.epsilon = seq.matrix.epsilon;
    rep.strict_pass = true;
    rep.epsilon_pass = true;
    const BigInt eps_num = rep.epsilon.num();
    const BigInt eps_den = rep.epsilon.den();

    for (int i = 1; i <= d - 1; ++i) {
        const int x = tuple[i - 1];
        const int col = x * (d + 1) - 1;
        std::vector<BigInt> b = b_vector(g, col);
        DominancePosition pos;
        pos.position = i;
        pos.peak = d + 1 - i;
        pos.terms.resize(d);
        for (int j = 1; j <= d; ++j)
            pos.terms[j - 1] = b[j] * g.v_entry(i, col - j);
        pos.strict = true;
        pos.within_epsilon = true;
        const BigInt& peak = pos.terms[pos.peak - 1];
        for (int j = 1; j <= d; ++j) {
            if (j == pos.peak) continue;
            if (!(pos.terms[j - 1] < peak)) pos.strict = false;
            if (!(pos.terms[j - 1] * eps_den < eps_num * peak)) pos.within_epsilon = false;
        }
        rep.strict_pass = rep.strict_pass && pos.strict;
        rep.epsilon_pass = rep.epsilon_pass && pos.within_epsilon;
        rep.positions.push_back(std::move(pos));
    }
    return rep;
}

} // namespace seqtype
