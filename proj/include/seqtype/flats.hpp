#pragma once

#include <optional>

#include "seqtype/multivector.hpp"
#include "seqtype/perm.hpp"

namespace seqtype {

// Oriented k-flat a + lin(B): equivalence under base-point shifts within
// lin(B) and basis changes with positive determinant.
struct Flat {
    int d = 0;
    int k = 0;
    Vector a;
    std::vector<Vector> basis;   // k linearly independent vectors
};

// u(B) = v_1 ^ ... ^ v_k; zero iff the basis is dependent.
Multivector u_of_basis(const std::vector<Vector>& basis);

// Type of an r-tuple of k-flats when d = rk+1: the permutation ranking
// h_i = top_pairing(a_i, u(B_1) ^ ... ^ u(B_r)). Requires the h_i pairwise
// distinct and the wedge nonzero.
Perm flats_tuple_type(const std::vector<Flat>& flats);

// The h values themselves (for oracles and reports).
std::vector<Rational> flats_h_values(const std::vector<Flat>& flats);

// Common type over all C(n, r) tuples, absent on disagreement.
std::optional<Perm> flats_sequence_type(const std::vector<Flat>& flats, int r);

} // namespace seqtype
