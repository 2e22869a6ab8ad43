#include "seqtype/multivector.hpp"

#include <bit>

namespace seqtype {

Multivector::Multivector(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim < 0 || dim > 63) throw invalid_argument_error("multivector dim out of range");
    if (grade < 0 || grade > dim) throw invalid_argument_error("multivector grade out of range");
}

Multivector Multivector::from_vector(const Vector& v) {
    Multivector m(v.dim(), 1);
    for (int i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) m.t_.emplace(std::uint64_t(1) << i, v[i]);
    return m;
}

Multivector Multivector::basis_blade(int dim, std::uint64_t mask, Rational coeff) {
    Multivector m(dim, std::popcount(mask));
    if (dim < 64 && (mask >> dim) != 0)
        throw invalid_argument_error("blade index out of range");
    if (!coeff.is_zero()) m.t_.emplace(mask, std::move(coeff));
    return m;
}

bool Multivector::is_zero() const { return t_.empty(); }

Rational Multivector::coeff(std::uint64_t mask) const {
    auto it = t_.find(mask);
    return it == t_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(std::uint64_t mask, const Rational& c) {
    if (std::popcount(mask) != grade_) throw invalid_argument_error("blade grade mismatch");
    auto it = t_.find(mask);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    if (a.dim_ != b.dim_ || a.grade_ != b.grade_)
        throw invalid_argument_error("multivector shape mismatch in +");
    Multivector r = a;
    for (const auto& [mask, c] : b.t_) r.add_term(mask, c);
    return r;
}

Multivector operator*(const Rational& s, const Multivector& a) {
    Multivector r(a.dim_, a.grade_);
    if (s.is_zero()) return r;
    for (const auto& [mask, c] : a.t_) r.t_.emplace(mask, s * c);
    return r;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.t_ == b.t_;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
    // For each index of b, count the indices of a above it; the parity of the
    // total is the parity of the interleaving permutation.
    int swaps = 0;
    while (b) {
        int i = std::countr_zero(b);
        b &= b - 1;
        swaps += std::popcount(a >> (i + 1));
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

Multivector mv_wedge(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw invalid_argument_error("wedge dim mismatch");
    if (a.grade() + b.grade() > a.dim())
        throw invalid_argument_error("wedge grade exceeds dimension");
    Multivector r(a.dim(), a.grade() + b.grade());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Rational c = ca * cb;
            if (merge_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

Rational top_pairing(const Vector& x, const Multivector& u) {
    const int d = u.dim();
    if (x.dim() != d) throw invalid_argument_error("top_pairing dim mismatch");
    if (u.grade() != d - 1) throw invalid_argument_error("top_pairing needs grade d-1");
    const std::uint64_t full = (d == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << d) - 1);
    Rational s;
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        std::uint64_t rest = full ^ (std::uint64_t(1) << i);
        Rational c = u.coeff(rest);
        if (c.is_zero()) continue;
        // moving e_i to the front of e_rest costs i transpositions
        Rational term = x[i] * c;
        if (i % 2 == 1) term = -term;
        s += term;
    }
    return s;
}

} // namespace seqtype
