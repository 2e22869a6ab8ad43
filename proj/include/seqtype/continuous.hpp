#pragma once

#include <optional>

#include "seqtype/lines.hpp"

namespace seqtype {

// Rational-coefficient polynomial, coefficient of t^i at index i.
struct Polynomial {
    std::vector<Rational> coeffs;
    Rational eval(const Rational& t) const;
};

// Principal Vandermondian: product of (t_i - t_j) over i > j, equal to the
// determinant of the power matrix with exponents 0..d-2. Input must be
// strictly increasing and positive.
Rational vandermonde(const std::vector<Rational>& ts);

// Secondary Vandermondian V_j: the generalized power-matrix determinant with
// exponent set {0,...,d-1} minus {d-1-j}, 1 <= j <= d-1, computed as an
// explicit determinant.
Rational secondary_vandermonde(const std::vector<Rational>& ts, int j);

// Elementary symmetric function E_j; E_0 = 1.
Rational elem_symmetric(const std::vector<Rational>& ts, int j);

// Determinant of the matrix with alternating-sign first column
// (a_1, -a_2, ..., (-1)^(d-1) a_d) followed by the moment columns
// (1, t_i, ..., t_i^(d-1)); positive under the stated preconditions and equal
// to a_1 V_{d-1} + ... + a_d V_0.
Rational det_A(const std::vector<Rational>& a, const std::vector<Rational>& ts);

enum class FamilyKind { Generic, Hyperboloid, MomentDirection };

struct FamilySpec {
    int d = 0;
    FamilyKind kind = FamilyKind::Generic;
    std::vector<Polynomial> coeffs;          // generic kind: a_1..a_d
    Rational domain_lo, domain_hi;           // open interval
};

// The family line at parameter t.
//   generic:          v = (1, t, ..., t^(d-1)), a = (a_1(t), -a_2(t), ...)
//   moment-direction: a = (t, 0, ..., 0),       v = (1, t, ..., t^(d-1))
//   hyperboloid:      the identity-type ruling of x^2 + y^2 = z^2 + 1 under
//                     the tangent-half-angle parametrization, s in (-1, 1)
// Throws when t is outside the domain.
OrientedLine family_line(const FamilySpec& spec, const Rational& t);

FamilySpec hyperboloid_family();
FamilySpec moment_direction_family(int d);

// Samples the family at the given increasing parameters and classifies the
// sampled sequence. Positivity/monotonicity of generic coefficients is
// checked at the samples only and reported, not raised: a family violating
// the hypotheses may legitimately produce a non-identity type.
struct FamilyTypeCheck {
    std::optional<Perm> type;
    bool coeffs_ok = true;     // sampled-only positivity and monotonicity
    std::string note;          // first violation, when any
};
FamilyTypeCheck family_type_check(const FamilySpec& spec,
                                  const std::vector<Rational>& ts);

} // namespace seqtype
