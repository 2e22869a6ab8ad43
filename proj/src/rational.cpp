#include "seqtype/rational.hpp"

namespace seqtype {

Rational::Rational(long n, long d) {
    if (d == 0) throw invalid_argument_error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw invalid_argument_error("rational with zero denominator");
    q_ = mpq_class(n);
    q_ /= mpq_class(d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw invalid_argument_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw io_error("empty rational literal");
    std::string t(s);
    auto slash = t.find('/');
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw io_error("bad rational literal: '" + t + "'");
    if (slash != std::string::npos) {
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw io_error("zero denominator in rational literal: '" + t + "'");
    }
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational pow2(long e) {
    BigInt p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e >= 0 ? e : -e);
    return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::string bigint_str(const BigInt& z) { return z.get_str(); }

BigInt bigint_parse(std::string_view s) {
    BigInt z;
    if (z.set_str(std::string(s), 10) != 0)
        throw io_error("bad integer literal: '" + std::string(s) + "'");
    return z;
}

} // namespace seqtype
