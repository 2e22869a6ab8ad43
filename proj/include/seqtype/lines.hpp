#pragma once

#include <optional>

#include "seqtype/perm.hpp"
#include "seqtype/linalg.hpp"

namespace seqtype {

// Oriented line {a + t v}: equivalence class of (a, v) under base-point
// shifts along v and positive rescaling of v.
struct OrientedLine {
    int d = 0;
    Vector a;
    Vector v;   // nonzero
};

// h_i = det(a_i | v_1 | ... | v_{d-1}), computed as u . a_i for
// u = wedge_to_vector(v_1, ..., v_{d-1}). Returns u and the h values.
struct TupleHValues {
    Vector u;
    std::vector<Rational> h;
};
TupleHValues tuple_h_values(const std::vector<OrientedLine>& lines);

// True iff u != 0 and the h_i are pairwise distinct.
bool line_general_position(const std::vector<OrientedLine>& lines);

// Type of a (d-1)-tuple: the permutation sigma with
// h_{sigma(1)} < ... < h_{sigma(d-1)}. Throws general_position_error.
Perm tuple_type(const std::vector<OrientedLine>& lines);

// Common type over all C(n, d-1) index-ordered tuples, or absent when two
// tuples disagree. Throws general_position_error naming the first degenerate
// tuple.
std::optional<Perm> sequence_type(const std::vector<OrientedLine>& lines, int d);

// Unoriented d-tuple type: d canonical permutation pairs, entry j computed
// from h_{j,i} = det(a_i | v_1 | ... v_j omitted ... | v_d) over i != j,
// reindexed to [d-1] and stored as the lexicographically smaller of
// {sigma, reverse(sigma)}.
using CanonicalPair = Perm;
struct UnorientedTypeProfile {
    int d = 0;
    std::vector<CanonicalPair> pairs;   // size d
};
UnorientedTypeProfile unoriented_tuple_type(const std::vector<OrientedLine>& lines);

// The common pair when all d entries agree, absent otherwise.
std::optional<CanonicalPair> reduce_profile(const UnorientedTypeProfile& p);

// Common profile over all C(n, d) tuples of a longer sequence, absent when
// tuples disagree.
std::optional<UnorientedTypeProfile>
unoriented_sequence_profile(const std::vector<OrientedLine>& lines, int d);

// Representative normalization for I/O: shifts a perpendicular to v and
// scales v to a primitive integer vector, preserving orientation. Never
// affects any type computation.
OrientedLine canonicalize_line(const OrientedLine& line);

bool operator==(const UnorientedTypeProfile& a, const UnorientedTypeProfile& b);

} // namespace seqtype
