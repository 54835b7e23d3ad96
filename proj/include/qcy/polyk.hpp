#ifndef QCY_POLYK_HPP
#define QCY_POLYK_HPP

#include "qcy/field.hpp"

#include <vector>

namespace qcy {

// Dense univariate polynomials over Q(i,sqrt2), trailing zeros stripped.
struct PolyK {
    std::vector<FieldScalar> a;   // a[k] * x^k

    PolyK() = default;
    explicit PolyK(FieldScalar c) {
        if (!c.is_zero()) a.push_back(std::move(c));
    }

    static PolyK x_pow(int n, FieldScalar c = FieldScalar::one()) {
        PolyK p;
        if (c.is_zero()) return p;
        p.a.assign(n + 1, FieldScalar::zero());
        p.a[n] = std::move(c);
        return p;
    }
    // x^L - s
    static PolyK binomial(int L, const FieldScalar& s) {
        PolyK p = x_pow(L);
        if (L == 0) { p = PolyK(FieldScalar::one() - s); return p; }
        p.a[0] = -s;
        return p;
    }

    bool is_zero() const { return a.empty(); }
    int degree() const { return static_cast<int>(a.size()) - 1; }   // -1 for zero
    const FieldScalar& lead() const { return a.back(); }

    void trim() {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }

    bool operator==(const PolyK& o) const { return a == o.a; }

    PolyK operator+(const PolyK& o) const {
        PolyK r;
        r.a.resize(std::max(a.size(), o.a.size()), FieldScalar::zero());
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k];
        for (std::size_t k = 0; k < o.a.size(); ++k) r.a[k] += o.a[k];
        r.trim();
        return r;
    }
    PolyK operator-(const PolyK& o) const {
        PolyK r;
        r.a.resize(std::max(a.size(), o.a.size()), FieldScalar::zero());
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k];
        for (std::size_t k = 0; k < o.a.size(); ++k) r.a[k] -= o.a[k];
        r.trim();
        return r;
    }
    PolyK operator*(const PolyK& o) const {
        if (is_zero() || o.is_zero()) return {};
        PolyK r;
        r.a.assign(a.size() + o.a.size() - 1, FieldScalar::zero());
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < o.a.size(); ++k)
                r.a[j + k] += a[j] * o.a[k];
        r.trim();
        return r;
    }
    PolyK scaled(const FieldScalar& c) const {
        if (c.is_zero()) return {};
        PolyK r = *this;
        for (auto& q : r.a) q *= c;
        return r;
    }

    PolyK monic() const {
        QCY_CHECK(!is_zero(), "monic of zero polynomial");
        return scaled(lead().inverse());
    }

    FieldScalar eval(const FieldScalar& x) const {
        FieldScalar v;
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
        return v;
    }

    PolyK derivative() const {
        PolyK r;
        for (std::size_t k = 1; k < a.size(); ++k)
            r.a.push_back(a[k] * FieldScalar::integer(static_cast<long>(k)));
        r.trim();
        return r;
    }
};

// Remainder of u by v (v nonzero).
inline PolyK poly_rem(PolyK u, const PolyK& v) {
    QCY_CHECK(!v.is_zero(), "poly_rem by zero");
    FieldScalar vinv = v.lead().inverse();
    while (!u.is_zero() && u.degree() >= v.degree()) {
        FieldScalar q = u.lead() * vinv;
        int shift = u.degree() - v.degree();
        for (int k = 0; k <= v.degree(); ++k) u.a[k + shift] -= q * v.a[k];
        u.trim();
    }
    return u;
}

inline PolyK poly_div_exact(const PolyK& u, const PolyK& v) {
    QCY_CHECK(!v.is_zero(), "poly_div by zero");
    PolyK rem = u, quot;
    quot.a.assign(std::max(0, u.degree() - v.degree() + 1), FieldScalar::zero());
    FieldScalar vinv = v.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= v.degree()) {
        FieldScalar q = rem.lead() * vinv;
        int shift = rem.degree() - v.degree();
        quot.a[shift] = q;
        for (int k = 0; k <= v.degree(); ++k) rem.a[k + shift] -= q * v.a[k];
        rem.trim();
    }
    QCY_CHECK(rem.is_zero(), "poly_div_exact: nonzero remainder");
    quot.trim();
    return quot;
}

// Monic gcd; gcd(0,0) = 0.
inline PolyK poly_gcd(PolyK u, PolyK v) {
    while (!v.is_zero()) {
        PolyK r = poly_rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    return u.monic();
}

inline PolyK poly_squarefree_part(const PolyK& u) {
    if (u.is_zero() || u.degree() == 0) return u;
    PolyK g = poly_gcd(u, u.derivative());
    if (g.degree() <= 0) return u.monic();
    return poly_div_exact(u, g).monic();
}

} // namespace qcy

#endif
