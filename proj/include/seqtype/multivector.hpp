#pragma once

#include <cstdint>
#include <map>

#include "seqtype/linalg.hpp"

namespace seqtype {

// Homogeneous (single-grade) element of the exterior algebra over Q^d,
// d <= 63. Basis blades are strictly increasing index subsets of [d] stored
// as bitmasks; absent keys are zero. Canonical keys make sign bookkeeping a
// pure merge count.
class Multivector {
public:
    Multivector(int dim, int grade);

    static Multivector from_vector(const Vector& v);
    static Multivector basis_blade(int dim, std::uint64_t mask, Rational coeff = 1);

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    bool is_zero() const;

    // Coefficient of a blade given as a bitmask over {0,...,d-1}.
    Rational coeff(std::uint64_t mask) const;
    void add_term(std::uint64_t mask, const Rational& c);

    const std::map<std::uint64_t, Rational>& terms() const { return t_; }

    friend Multivector operator+(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Rational& s, const Multivector& a);
    friend bool operator==(const Multivector& a, const Multivector& b);

private:
    int dim_;
    int grade_;
    std::map<std::uint64_t, Rational> t_;
};

// Graded wedge: bilinear, associative, anticommutative in the graded sense;
// blades with overlapping indices annihilate.
Multivector mv_wedge(const Multivector& a, const Multivector& b);

// Coefficient of e_{1..d} in x ^ U for U of grade d-1; equals
// det(x | v_1 | ... | v_{d-1}) when U is the wedge of those vectors.
Rational top_pairing(const Vector& x, const Multivector& u);

// Sign of merging two disjoint index sets (number of transpositions needed
// to interleave b's indices into a's, as -1/+1).
int merge_sign(std::uint64_t a, std::uint64_t b);

} // namespace seqtype
