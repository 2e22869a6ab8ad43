#pragma once

#include <optional>
#include <set>

#include "seqtype/linalg.hpp"

namespace seqtype {

struct PointSequence {
    int d = 0;
    std::vector<Vector> points;
};

// Orientation of d+1 points in R^d: the sign of the determinant of the
// (d+1)x(d+1) matrix whose columns are the lifted points (1, a_i), in the
// given order. With this lifting the moment curve gives +1 in every
// dimension. Throws on a zero determinant.
int orientation_sign(const std::vector<Vector>& points);

// The common orientation over all C(n, d+1) index-ordered tuples, or absent
// when two tuples disagree. Throws general_position_error when some tuple is
// degenerate.
std::optional<int> homogeneous_sign(const PointSequence& seq);

struct RadonPartition {
    int n = 0;               // = d + 2
    std::set<int> X, Y;      // 1-based indices; 1 is always in X
};

// Unique Radon partition of d+2 points in general position: X is the class
// with positive dependence coefficient after normalizing lambda_1 > 0.
RadonPartition radon_partition(const std::vector<Vector>& points);

// True iff membership alternates between X and Y along 1..n.
bool is_interlacing(const RadonPartition& p);

// gamma(t) = (t, t^2, ..., t^d); gamma* flips the last coordinate's sign.
Vector moment(const Rational& t, int d);
Vector moment_star(const Rational& t, int d);

} // namespace seqtype
