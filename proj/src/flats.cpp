#include "seqtype/flats.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "seqtype/combinatorics.hpp"

namespace seqtype {

Multivector u_of_basis(const std::vector<Vector>& basis) {
    if (basis.empty()) throw invalid_argument_error("empty basis");
    const int d = basis[0].dim();
    Multivector u = Multivector::basis_blade(d, 0, 1);   // scalar 1
    for (const auto& v : basis) {
        if (v.dim() != d) throw invalid_argument_error("basis dim mismatch");
        u = mv_wedge(u, Multivector::from_vector(v));
    }
    return u;
}

namespace {

void check_flats(const std::vector<Flat>& flats) {
    if (flats.empty()) throw invalid_argument_error("empty flat tuple");
    const int d = flats[0].d;
    const int k = flats[0].k;
    const int r = static_cast<int>(flats.size());
    if (d != r * k + 1)
        throw invalid_argument_error("flats tuple needs d = rk+1 (got d=" +
                                     std::to_string(d) + ", r=" + std::to_string(r) +
                                     ", k=" + std::to_string(k) + ")");
    for (const auto& f : flats) {
        if (f.d != d || f.k != k)
            throw invalid_argument_error("flats of mixed dimension");
        if (f.a.dim() != d || static_cast<int>(f.basis.size()) != k)
            throw invalid_argument_error("flat shape mismatch");
    }
}

#ifndef NDEBUG
// Self-check: the multivector pipeline h_i must equal the direct d x d
// determinant det(a_i | B_1 | ... | B_r).
Rational direct_h(const std::vector<Flat>& flats, int i) {
    std::vector<Vector> cols;
    cols.push_back(flats[i].a);
    for (const auto& f : flats)
        for (const auto& v : f.basis) cols.push_back(v);
    return det(Matrix::from_columns(cols));
}
#endif

} // namespace

std::vector<Rational> flats_h_values(const std::vector<Flat>& flats) {
    check_flats(flats);
    const int d = flats[0].d;
    Multivector u = Multivector::basis_blade(d, 0, 1);
    for (const auto& f : flats) u = mv_wedge(u, u_of_basis(f.basis));
    if (u.is_zero())
        throw general_position_error("flat tuple spans a degenerate wedge");
    std::vector<Rational> h;
    h.reserve(flats.size());
    for (size_t i = 0; i < flats.size(); ++i) {
        h.push_back(top_pairing(flats[i].a, u));
        assert(h.back() == direct_h(flats, static_cast<int>(i)));
    }
    return h;
}

Perm flats_tuple_type(const std::vector<Flat>& flats) {
    std::vector<Rational> h = flats_h_values(flats);
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j)
            if (h[i] == h[j])
                throw general_position_error("coinciding h values in flat tuple");
    Perm order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });
    for (auto& v : order) ++v;
    return order;
}

std::optional<Perm> flats_sequence_type(const std::vector<Flat>& flats, int r) {
    const int n = static_cast<int>(flats.size());
    if (n < r) throw invalid_argument_error("need at least r flats");
    std::optional<Perm> common;
    bool mixed = false;
    for_each_combination(n, r, [&](const std::vector<int>& idx) {
        if (mixed) return;
        std::vector<Flat> tuple;
        tuple.reserve(r);
        for (int i : idx) tuple.push_back(flats[i]);
        Perm pi = flats_tuple_type(tuple);
        if (!common) common = pi;
        else if (*common != pi) mixed = true;
    });
    if (mixed) return std::nullopt;
    return common;
}

} // namespace seqtype
