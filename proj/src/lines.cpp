#include "seqtype/lines.hpp"

#include <algorithm>
#include <numeric>

#include "seqtype/combinatorics.hpp"

namespace seqtype {

namespace {

void check_lines(const std::vector<OrientedLine>& lines, size_t expect) {
    if (lines.size() != expect)
        throw invalid_argument_error("wrong number of lines for this tuple operation");
    for (const auto& l : lines) {
        if (l.d != lines[0].d)
            throw invalid_argument_error("lines of mixed dimension");
        if (l.a.dim() != l.d || l.v.dim() != l.d)
            throw invalid_argument_error("line coordinate dim mismatch");
        if (l.v.is_zero())
            throw invalid_argument_error("line with zero direction");
    }
}

// Ranks 0-based positions by strictly increasing key; values are 1-based.
Perm rank_perm(const std::vector<Rational>& h) {
    Perm order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h[a] < h[b]; });
    for (auto& v : order) ++v;
    return order;
}

bool pairwise_distinct(const std::vector<Rational>& h) {
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j)
            if (h[i] == h[j]) return false;
    return true;
}

} // namespace

TupleHValues tuple_h_values(const std::vector<OrientedLine>& lines) {
    if (lines.empty()) throw invalid_argument_error("empty tuple");
    const int d = lines[0].d;
    check_lines(lines, static_cast<size_t>(d - 1));
    std::vector<Vector> vs;
    vs.reserve(lines.size());
    for (const auto& l : lines) vs.push_back(l.v);
    TupleHValues r;
    r.u = wedge_to_vector(vs);
    r.h.reserve(lines.size());
    for (const auto& l : lines) r.h.push_back(dot(r.u, l.a));
    return r;
}

bool line_general_position(const std::vector<OrientedLine>& lines) {
    TupleHValues hv = tuple_h_values(lines);
    return !hv.u.is_zero() && pairwise_distinct(hv.h);
}

Perm tuple_type(const std::vector<OrientedLine>& lines) {
    TupleHValues hv = tuple_h_values(lines);
    if (hv.u.is_zero())
        throw general_position_error("direction vectors are linearly dependent");
    if (!pairwise_distinct(hv.h))
        throw general_position_error("coinciding h values in line tuple");
    return rank_perm(hv.h);
}

std::optional<Perm> sequence_type(const std::vector<OrientedLine>& lines, int d) {
    const int n = static_cast<int>(lines.size());
    if (n < d - 1) throw invalid_argument_error("need at least d-1 lines");
    std::optional<Perm> common;
    bool mixed = false;
    std::optional<std::string> degenerate;
    for_each_combination(n, d - 1, [&](const std::vector<int>& idx) {
        if (mixed || degenerate) return;
        std::vector<OrientedLine> tuple;
        tuple.reserve(d - 1);
        for (int i : idx) tuple.push_back(lines[i]);
        try {
            Perm sigma = tuple_type(tuple);
            if (!common) common = sigma;
            else if (*common != sigma) mixed = true;
        } catch (const general_position_error&) {
            std::string where;
            for (int i : idx) where += std::to_string(i + 1) + " ";
            degenerate = where;
        }
    });
    if (degenerate)
        throw general_position_error("tuple ( " + *degenerate + ") violates general position");
    if (mixed) return std::nullopt;
    return common;
}

UnorientedTypeProfile unoriented_tuple_type(const std::vector<OrientedLine>& lines) {
    if (lines.empty()) throw invalid_argument_error("empty tuple");
    const int d = lines[0].d;
    if (d < 3) throw invalid_argument_error("unoriented types need d >= 3");
    check_lines(lines, static_cast<size_t>(d));

    UnorientedTypeProfile profile;
    profile.d = d;
    profile.pairs.reserve(d);
    for (int j = 0; j < d; ++j) {
        std::vector<Vector> vs;
        vs.reserve(d - 1);
        for (int k = 0; k < d; ++k)
            if (k != j) vs.push_back(lines[k].v);
        Vector uj = wedge_to_vector(vs);
        std::vector<Rational> h;
        h.reserve(d - 1);
        for (int i = 0; i < d; ++i)
            if (i != j) h.push_back(dot(uj, lines[i].a));
        if (uj.is_zero() || !pairwise_distinct(h))
            throw general_position_error(
                "unoriented tuple degenerate at omitted index " + std::to_string(j + 1));
        // rank_perm already works on the reindexed positions: position i of h
        // is the i-th surviving line in index order.
        Perm sigma = rank_perm(h);
        Perm rev = reversed(sigma);
        profile.pairs.push_back(std::min(sigma, rev));
    }
    return profile;
}

std::optional<CanonicalPair> reduce_profile(const UnorientedTypeProfile& p) {
    if (p.pairs.empty()) return std::nullopt;
    for (const auto& q : p.pairs)
        if (q != p.pairs[0]) return std::nullopt;
    return p.pairs[0];
}

std::optional<UnorientedTypeProfile>
unoriented_sequence_profile(const std::vector<OrientedLine>& lines, int d) {
    const int n = static_cast<int>(lines.size());
    if (n < d) throw invalid_argument_error("need at least d lines");
    std::optional<UnorientedTypeProfile> common;
    bool mixed = false;
    for_each_combination(n, d, [&](const std::vector<int>& idx) {
        if (mixed) return;
        std::vector<OrientedLine> tuple;
        tuple.reserve(d);
        for (int i : idx) tuple.push_back(lines[i]);
        UnorientedTypeProfile p = unoriented_tuple_type(tuple);
        if (!common) common = p;
        else if (!(*common == p)) mixed = true;
    });
    if (mixed) return std::nullopt;
    return common;
}

OrientedLine canonicalize_line(const OrientedLine& line) {
    if (line.v.is_zero()) throw invalid_argument_error("line with zero direction");
    OrientedLine out = line;
    Rational vv = dot(line.v, line.v);
    Rational av = dot(line.a, line.v);
    out.a = line.a - (av / vv) * line.v;

    // positive scale making v a primitive integer vector
    BigInt l = 1, g = 0;
    for (int i = 0; i < line.d; ++i)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), line.v[i].den_ptr());
    std::vector<BigInt> z(line.d);
    for (int i = 0; i < line.d; ++i) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), line.v[i].den_ptr());
        mpz_mul(z[i].get_mpz_t(), q.get_mpz_t(), line.v[i].num_ptr());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    for (int i = 0; i < line.d; ++i) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), z[i].get_mpz_t(), g.get_mpz_t());
        out.v[i] = Rational(q);
    }
    return out;
}

bool operator==(const UnorientedTypeProfile& a, const UnorientedTypeProfile& b) {
    return a.d == b.d && a.pairs == b.pairs;
}

} // namespace seqtype
