#include "seqtype/continuous.hpp"

namespace seqtype {

Rational Polynomial::eval(const Rational& t) const {
    Rational r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + *it;
    return r;
}

namespace {

void check_ts(const std::vector<Rational>& ts) {
    if (ts.empty()) throw invalid_argument_error("empty parameter list");
    if (ts[0].sign() <= 0)
        throw invalid_argument_error("parameters must be positive");
    for (size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i - 1] < ts[i]))
            throw invalid_argument_error("parameters must be strictly increasing");
}

Rational power_matrix_det(const std::vector<Rational>& ts, const std::vector<int>& exps) {
    const int n = static_cast<int>(ts.size());
    Matrix m(n, n);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            Rational p = 1;
            for (int e = 0; e < exps[r]; ++e) p *= ts[c];
            m.at(r, c) = p;
        }
    }
    return det(m);
}

} // namespace

Rational vandermonde(const std::vector<Rational>& ts) {
    check_ts(ts);
    Rational v = 1;
    for (size_t i = 1; i < ts.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            v *= ts[i] - ts[j];
    return v;
}

Rational secondary_vandermonde(const std::vector<Rational>& ts, int j) {
    check_ts(ts);
    const int d = static_cast<int>(ts.size()) + 1;
    if (j < 1 || j > d - 1)
        throw invalid_argument_error("secondary Vandermondian index out of range");
    std::vector<int> exps;
    for (int b = 0; b <= d - 1; ++b)
        if (b != d - 1 - j) exps.push_back(b);
    return power_matrix_det(ts, exps);
}

Rational elem_symmetric(const std::vector<Rational>& ts, int j) {
    const int n = static_cast<int>(ts.size());
    if (j < 0 || j > n) throw invalid_argument_error("elementary symmetric index out of range");
    // e[k] after processing each t: e_k += t * e_{k-1}
    std::vector<Rational> e(j + 1);
    e[0] = 1;
    for (const auto& t : ts)
        for (int k = j; k >= 1; --k) e[k] += t * e[k - 1];
    return e[j];
}

Rational det_A(const std::vector<Rational>& a, const std::vector<Rational>& ts) {
    check_ts(ts);
    const int d = static_cast<int>(a.size());
    if (static_cast<int>(ts.size()) != d - 1)
        throw invalid_argument_error("det_A needs d coefficients and d-1 parameters");
    for (const auto& x : a)
        if (x.sign() <= 0) throw invalid_argument_error("det_A coefficients must be positive");
    Matrix m(d, d);
    for (int r = 0; r < d; ++r)
        m.at(r, 0) = (r % 2 == 0) ? a[r] : -a[r];
    for (int c = 1; c < d; ++c) {
        Rational p = 1;
        for (int r = 0; r < d; ++r) {
            m.at(r, c) = p;
            p *= ts[c - 1];
        }
    }
    return det(m);
}

FamilySpec hyperboloid_family() {
    FamilySpec s;
    s.d = 3;
    s.kind = FamilyKind::Hyperboloid;
    s.domain_lo = Rational(-1);
    s.domain_hi = Rational(1);
    return s;
}

FamilySpec moment_direction_family(int d) {
    FamilySpec s;
    s.d = d;
    s.kind = FamilyKind::MomentDirection;
    s.domain_lo = Rational(0);
    s.domain_hi = Rational(1000000);
    return s;
}

OrientedLine family_line(const FamilySpec& spec, const Rational& t) {
    if (!(spec.domain_lo < t) || !(t < spec.domain_hi))
        throw invalid_argument_error("family parameter outside domain");
    OrientedLine line;
    line.d = spec.d;
    switch (spec.kind) {
    case FamilyKind::Hyperboloid: {
        // One ruling of x^2 + y^2 = z^2 + 1, rationally parametrized via the
        // tangent half-angle: cos = (1-s^2)/(1+s^2), sin = 2s/(1+s^2).
        // This ruling is the one whose increasing-parameter sequences come
        // out homogeneous of type identity.
        Rational s2 = t * t;
        Rational den = Rational(1) + s2;
        Rational c = (Rational(1) - s2) / den;
        Rational sn = (Rational(2) * t) / den;
        line.a = Vector{c, sn, Rational(0)};
        line.v = Vector{sn, -c, Rational(1)};
        break;
    }
    case FamilyKind::MomentDirection: {
        Vector a(spec.d), v(spec.d);
        a[0] = t;
        Rational p = 1;
        for (int i = 0; i < spec.d; ++i) {
            v[i] = p;
            p *= t;
        }
        line.a = a;
        line.v = v;
        break;
    }
    case FamilyKind::Generic: {
        if (static_cast<int>(spec.coeffs.size()) != spec.d)
            throw invalid_argument_error("generic family needs d coefficient polynomials");
        Vector a(spec.d), v(spec.d);
        Rational p = 1;
        for (int i = 0; i < spec.d; ++i) {
            v[i] = p;
            p *= t;
            Rational ai = spec.coeffs[i].eval(t);
            a[i] = (i % 2 == 0) ? ai : -ai;
        }
        line.a = a;
        line.v = v;
        break;
    }
    }
    return line;
}

FamilyTypeCheck family_type_check(const FamilySpec& spec,
                                  const std::vector<Rational>& ts) {
    if (static_cast<int>(ts.size()) < spec.d - 1)
        throw invalid_argument_error("need at least d-1 samples");
    for (size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i - 1] < ts[i]))
            throw invalid_argument_error("samples must be strictly increasing");

    FamilyTypeCheck out;
    if (spec.kind == FamilyKind::Generic) {
        // sampled-only positivity and monotonicity of the coefficients
        for (int i = 0; i < spec.d && out.coeffs_ok; ++i) {
            Rational prev;
            bool first = true;
            for (const auto& t : ts) {
                Rational val = spec.coeffs[i].eval(t);
                if (val.sign() <= 0) {
                    out.coeffs_ok = false;
                    out.note = "coefficient a_" + std::to_string(i + 1) +
                               " is not positive at t = " + t.str();
                    break;
                }
                if (!first && !(prev < val)) {
                    out.coeffs_ok = false;
                    out.note = "coefficient a_" + std::to_string(i + 1) +
                               " is not increasing at t = " + t.str();
                    break;
                }
                prev = val;
                first = false;
            }
        }
    }
    std::vector<OrientedLine> lines;
    lines.reserve(ts.size());
    for (const auto& t : ts) lines.push_back(family_line(spec, t));
    out.type = sequence_type(lines, spec.d);
    return out;
}

} // namespace seqtype
