#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "seqtype/errors.hpp"

namespace seqtype {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. The only number type used in geometric computations; there is
// no floating-point fallback anywhere.
//
// Heavy integer-only workloads (RI matrices, constructed line coordinates)
// operate on BigInt directly and only wrap results as Rational at the edges,
// so the gcd work mpq arithmetic performs stays on desk-scale operands.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long n, long d);
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& n, const BigInt& d);

    // Parses "p/q" (q omitted when 1), base 10, unbounded size.
    static Rational parse(std::string_view s);

    std::string str() const;

    BigInt num() const { return BigInt(mpq_numref(q_.get_mpq_t())); }
    BigInt den() const { return BigInt(mpq_denref(q_.get_mpq_t())); }
    mpz_srcptr num_ptr() const { return mpq_numref(q_.get_mpq_t()); }
    mpz_srcptr den_ptr() const { return mpq_denref(q_.get_mpq_t()); }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0; }

    Rational operator-() const { Rational r; r.q_ = -q_; return r; }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { Rational r; mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t()); return r; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

// 2^e as a Rational (e may be negative).
Rational pow2(long e);

std::string bigint_str(const BigInt& z);
BigInt bigint_parse(std::string_view s);

} // namespace seqtype
