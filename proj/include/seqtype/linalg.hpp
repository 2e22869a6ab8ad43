#pragma once

#include <initializer_list>
#include <vector>

#include "seqtype/rational.hpp"

namespace seqtype {

// Dense vector of rationals.
class Vector {
public:
    Vector() = default;
    explicit Vector(int dim) : c_(dim) {}
    Vector(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit Vector(std::vector<Rational> xs) : c_(std::move(xs)) {}

    int dim() const { return static_cast<int>(c_.size()); }
    Rational& operator[](int i) { return c_[i]; }
    const Rational& operator[](int i) const { return c_[i]; }

    bool is_zero() const;

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Rational& s, const Vector& v);
    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

    const std::vector<Rational>& coords() const { return c_; }

private:
    std::vector<Rational> c_;
};

Rational dot(const Vector& a, const Vector& b);

// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Matrix from_columns(const std::vector<Vector>& cols);
    static Matrix from_rows(const std::vector<Vector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    Vector column(int c) const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// Integer matrices back the fraction-free paths.
using IntMatrix = std::vector<std::vector<BigInt>>;

// Exact determinant of a square integer matrix by Bareiss one-step
// fraction-free elimination (all divisions exact). Destroys its argument.
BigInt det_int(IntMatrix m);

// Exact determinant of a square rational matrix: clears denominators row by
// row, runs the integer elimination, and divides the scale factors back out.
Rational det(const Matrix& m);

// Unique u with dot(u, x) = det(x | v_1 | ... | v_{d-1}) for all x in R^d.
// Zero iff the v_i are linearly dependent (a value, not an error).
Vector wedge_to_vector(const std::vector<Vector>& vs);

// Affine dependence of d+2 points in R^d in general position: the unique (up
// to scale) lambda with sum(lambda) = 0 and sum(lambda_i * p_i) = 0, scaled to
// coprime integers with lambda_1 > 0. Throws general_position_error when any
// d+1 of the points are affinely dependent.
Vector affine_dependence(const std::vector<Vector>& points);

} // namespace seqtype
