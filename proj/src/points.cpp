#include "seqtype/points.hpp"

#include "seqtype/combinatorics.hpp"

namespace seqtype {

int orientation_sign(const std::vector<Vector>& points) {
    if (points.empty()) throw invalid_argument_error("no points");
    const int d = points[0].dim();
    if (static_cast<int>(points.size()) != d + 1)
        throw invalid_argument_error("orientation_sign needs d+1 points in R^d");
    Matrix m(d + 1, d + 1);
    for (int c = 0; c <= d; ++c) {
        if (points[c].dim() != d) throw invalid_argument_error("point dim mismatch");
        m.at(0, c) = 1;
        for (int r = 0; r < d; ++r) m.at(r + 1, c) = points[c][r];
    }
    Rational dv = det(m);
    if (dv.is_zero())
        throw general_position_error("d+1 points lie on a hyperplane");
    return dv.sign();
}

std::optional<int> homogeneous_sign(const PointSequence& seq) {
    const int n = static_cast<int>(seq.points.size());
    const int d = seq.d;
    if (n < d + 1) throw invalid_argument_error("need at least d+1 points");
    std::optional<int> common;
    bool mixed = false;
    for_each_combination(n, d + 1, [&](const std::vector<int>& idx) {
        std::vector<Vector> tuple;
        tuple.reserve(d + 1);
        for (int i : idx) tuple.push_back(seq.points[i]);
        int s = orientation_sign(tuple);
        if (!common) common = s;
        else if (*common != s) mixed = true;
    });
    if (mixed) return std::nullopt;
    return common;
}

RadonPartition radon_partition(const std::vector<Vector>& points) {
    Vector lambda = affine_dependence(points);
    RadonPartition p;
    p.n = lambda.dim();
    for (int i = 0; i < p.n; ++i) {
        if (lambda[i].sign() > 0) p.X.insert(i + 1);
        else p.Y.insert(i + 1);
    }
    return p;
}

bool is_interlacing(const RadonPartition& p) {
    bool prev_in_x = p.X.count(1) > 0;
    for (int i = 2; i <= p.n; ++i) {
        bool in_x = p.X.count(i) > 0;
        if (in_x == prev_in_x) return false;
        prev_in_x = in_x;
    }
    return true;
}

Vector moment(const Rational& t, int d) {
    Vector v(d);
    Rational p = 1;
    for (int i = 0; i < d; ++i) {
        p *= t;
        v[i] = p;
    }
    return v;
}

Vector moment_star(const Rational& t, int d) {
    Vector v = moment(t, d);
    if (d > 0) v[d - 1] = -v[d - 1];
    return v;
}

} // namespace seqtype
