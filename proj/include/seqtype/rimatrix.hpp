#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqtype/rational.hpp"

namespace seqtype {

enum class RiMode { ExactInductive, GeometricTemplate, TunedTemplate };

std::string ri_mode_str(RiMode m);
RiMode ri_mode_parse(const std::string& s);

// Grid of rapidly increasing positive integers together with the tolerance it
// was built for. ExactInductive matrices satisfy, by construction, for every
// k x k submatrix (k >= 2) and every non-main diagonal D:
//     prod(D) < eta * prod(main diagonal),      eta = epsilon / D!
// which yields |det M* - P| < epsilon * P, and the row-triple condition
//     a(i,j-1) a(i,j) < epsilon a(i,j+1).
// GeometricTemplate and TunedTemplate matrices make no such promise; callers
// verify or rely on downstream end-to-end verification.
struct RIMatrix {
    int D = 0;
    int m = 0;
    std::vector<std::vector<BigInt>> a;   // row-major, D rows of m entries
    Rational epsilon;
    Rational eta;
    RiMode mode = RiMode::ExactInductive;

    const BigInt& at(int i, int j) const { return a[i][j]; }
};

struct BuildOptions {
    // Refuse to build when the row-triple recurrence already predicts a larger
    // entry than this (and abort mid-build if an entry exceeds it anyway).
    std::int64_t max_entry_bits = 10'000'000;
    // Exhaustive diagonal enumeration per entry up to this many candidates;
    // beyond it a conservative closed bound takes over.
    std::uint64_t per_entry_cap = 100'000;
};

// Inductive construction of certified RI matrices: every entry is the
// smallest integer exceeding all recorded lower bounds (monotonicity, the
// row-triple condition, and the diagonal-domination constraints for every
// submatrix whose bottom-right entry it is).
RIMatrix build_exact(int D, int m, const Rational& epsilon,
                     const BuildOptions& opts = {});

// Predicted bit length of the largest entry of build_exact(D, m, epsilon),
// from the log-space recurrence the row-triple condition forces. A lower
// estimate; the builder also enforces the budget on actual entries.
double predict_entry_bits(int D, int m, const Rational& epsilon);

// Pure power-of-two template a(i,j) = 2^(s j t^(i-1)). Row-major
// monotonicity forces t > m; rejected otherwise. None of the RI conditions
// are asserted; the stored epsilon records the certified 2x2 ratio bound
// (D!-1) / 2^(s(t-1)) when that is below one.
RIMatrix build_geometric(int D, int m, int s, int t,
                         std::int64_t max_entry_bits = 10'000'000);

struct RiCondition {
    bool pass = true;
    std::string witness;   // first failure, empty when pass
};

struct RiVerifyReport {
    RiCondition monotonic;
    RiCondition ri;        // det M* = (1 +- eps) P over square submatrices
    RiCondition row_triple;   // a(i,j-1) a(i,j) < eps a(i,j+1)
    std::string ri_sampling = "exhaustive";   // or "sampled"
    std::uint64_t submatrices_checked = 0;
    bool all_pass() const { return monotonic.pass && ri.pass && row_triple.pass; }
};

struct VerifyOptions {
    std::uint64_t submatrix_cap = 20'000;   // exhaustive when total <= cap
    std::uint64_t sample_count = 500;       // larger submatrices sampled
    std::uint64_t seed = 1;
};

RiVerifyReport verify_ri(const RIMatrix& M, const Rational& epsilon,
                         const VerifyOptions& opts = {});

// Exhaustive check of the diagonal-domination condition itself (every
// non-main diagonal of every k x k submatrix below eta times the main
// diagonal product). Returns the first witness or an empty string. Intended
// for small matrices; cost grows like sum C(D,k) C(m,k) k!.
std::string check_diagonal_domination(const RIMatrix& M, const Rational& eta);

BigInt factorial(int n);

} // namespace seqtype
