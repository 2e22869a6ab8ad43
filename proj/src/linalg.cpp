#include "seqtype/linalg.hpp"

#include <utility>

namespace seqtype {

bool Vector::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw invalid_argument_error("vector dim mismatch");
    Vector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw invalid_argument_error("vector dim mismatch");
    Vector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw invalid_argument_error("vector dim mismatch");
    Rational s;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].dim(), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (cols[c].dim() != m.rows()) throw invalid_argument_error("ragged columns");
        for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<int>(rows.size()), rows[0].dim());
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[r].dim() != m.cols()) throw invalid_argument_error("ragged rows");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(int c) const {
    Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

BigInt det_int(IntMatrix m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw invalid_argument_error("det of non-square matrix");

    int sign = 1;
    BigInt prev = 1;
    BigInt t;
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot: first row with a nonzero entry in column k
        size_t p = k;
        while (p < n && mpz_sgn(m[p][k].get_mpz_t()) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                // m[i][j] = (m[i][j]*m[k][k] - m[i][k]*m[k][j]) / prev, exact
                mpz_mul(t.get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
                mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt d = m[n - 1][n - 1];
    if (sign < 0) mpz_neg(d.get_mpz_t(), d.get_mpz_t());
    return d;
}

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw invalid_argument_error("det of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Clear denominators: scale row r by the lcm L_r of its denominators,
    // then det(m) = det_int / prod(L_r).
    IntMatrix z(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (int r = 0; r < n; ++r) {
        BigInt l = 1;
        for (int c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den_ptr());
        for (int c = 0; c < n; ++c) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den_ptr());
            mpz_mul(z[r][c].get_mpz_t(), q.get_mpz_t(), m.at(r, c).num_ptr());
        }
        scale *= l;
    }
    return Rational(det_int(std::move(z)), scale);
}

namespace {

// Minor determinant of the d x (d-1) column stack [v_1 .. v_{d-1}] with row
// `skip` removed.
BigInt int_minor(const std::vector<std::vector<BigInt>>& cols, int skip) {
    const int d = static_cast<int>(cols.size()) + 1;
    IntMatrix sub(d - 1, std::vector<BigInt>(d - 1));
    for (int c = 0; c < d - 1; ++c) {
        int rr = 0;
        for (int r = 0; r < d; ++r) {
            if (r == skip) continue;
            sub[rr][c] = cols[c][r];
            ++rr;
        }
    }
    return det_int(std::move(sub));
}

} // namespace

Vector wedge_to_vector(const std::vector<Vector>& vs) {
    if (vs.empty()) throw invalid_argument_error("wedge of no vectors");
    const int d = vs[0].dim();
    if (static_cast<int>(vs.size()) != d - 1)
        throw invalid_argument_error("wedge_to_vector needs d-1 vectors in R^d");
    for (const auto& v : vs)
        if (v.dim() != d) throw invalid_argument_error("vector dim mismatch");

    // Scale each v_i to integers by its positive denominator lcm; this scales
    // u by a positive factor, which every caller tolerates (u is used for
    // sign and order comparisons against a fixed tuple).  The exact value is
    // restored by dividing the scale back out.
    BigInt scale = 1;
    std::vector<std::vector<BigInt>> cols;
    cols.reserve(vs.size());
    for (const auto& v : vs) {
        BigInt l = 1;
        for (int i = 0; i < d; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].den_ptr());
        std::vector<BigInt> col(d);
        for (int i = 0; i < d; ++i) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), v[i].den_ptr());
            mpz_mul(col[i].get_mpz_t(), q.get_mpz_t(), v[i].num_ptr());
        }
        cols.push_back(std::move(col));
        scale *= l;
    }

    Vector u(d);
    for (int i = 0; i < d; ++i) {
        BigInt mi = int_minor(cols, i);
        if (i % 2 == 1) mpz_neg(mi.get_mpz_t(), mi.get_mpz_t());
        u[i] = Rational(mi, scale);
    }
    return u;
}

Vector affine_dependence(const std::vector<Vector>& points) {
    if (points.empty()) throw invalid_argument_error("no points");
    const int d = points[0].dim();
    const int n = d + 2;
    if (static_cast<int>(points.size()) != n)
        throw invalid_argument_error("affine_dependence needs d+2 points in R^d");
    for (const auto& p : points)
        if (p.dim() != d) throw invalid_argument_error("point dim mismatch");

    // lambda_j = (-1)^(j-1) det(lifted points with column j removed); the
    // lifted points are (1, p) in R^(d+1). Any zero minor means some d+1 of
    // the points are affinely dependent.
    std::vector<Rational> lambda(n);
    for (int j = 0; j < n; ++j) {
        Matrix m(d + 1, d + 1);
        int cc = 0;
        for (int c = 0; c < n; ++c) {
            if (c == j) continue;
            m.at(0, cc) = 1;
            for (int r = 0; r < d; ++r) m.at(r + 1, cc) = points[c][r];
            ++cc;
        }
        Rational mj = det(m);
        if (mj.is_zero())
            throw general_position_error(
                "degenerate input: the d+1 points omitting index " +
                std::to_string(j + 1) + " are affinely dependent");
        lambda[j] = (j % 2 == 0) ? mj : -mj;
    }

    // Scale to coprime integers with lambda_1 > 0.
    BigInt l = 1, g = 0;
    for (const auto& x : lambda) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den_ptr());
    std::vector<BigInt> z(n);
    for (int j = 0; j < n; ++j) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), lambda[j].den_ptr());
        mpz_mul(z[j].get_mpz_t(), q.get_mpz_t(), lambda[j].num_ptr());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[j].get_mpz_t());
    }
    int flip = mpz_sgn(z[0].get_mpz_t()) < 0 ? -1 : 1;
    Vector out(n);
    for (int j = 0; j < n; ++j) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), z[j].get_mpz_t(), g.get_mpz_t());
        if (flip < 0) mpz_neg(q.get_mpz_t(), q.get_mpz_t());
        out[j] = Rational(q);
    }
    return out;
}

} // namespace seqtype
