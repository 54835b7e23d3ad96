#ifndef QCY_POLY8_HPP
#define QCY_POLY8_HPP

#include "qcy/field.hpp"
#include "qcy/mono.hpp"

#include <array>
#include <map>
#include <string>

namespace qcy {

using ExpVec = std::array<uint8_t, 8>;

// Homogeneous sparse polynomial in the eight coordinates (Y0..Y3, X0..X3).
struct SparsePolynomial {
    std::map<ExpVec, FieldScalar> terms;   // no zero coefficients stored

    static SparsePolynomial variable(int idx) {
        SparsePolynomial p;
        ExpVec e{};
        e[idx] = 1;
        p.terms.emplace(e, FieldScalar::one());
        return p;
    }
    static SparsePolynomial monomial(ExpVec e, FieldScalar c) {
        SparsePolynomial p;
        if (!c.is_zero()) p.terms.emplace(e, std::move(c));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (uint8_t v : e) t += v;
            if (d < 0) d = t;
            QCY_CHECK(d == t, "polynomial not homogeneous");
        }
        return d;
    }

    bool operator==(const SparsePolynomial& o) const { return terms == o.terms; }
    bool operator<(const SparsePolynomial& o) const;

    SparsePolynomial operator+(const SparsePolynomial& o) const {
        SparsePolynomial r = *this;
        for (const auto& [e, c] : o.terms) {
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
        return r;
    }
    SparsePolynomial operator-() const {
        SparsePolynomial r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    SparsePolynomial operator-(const SparsePolynomial& o) const { return *this + (-o); }
    SparsePolynomial operator*(const SparsePolynomial& o) const {
        SparsePolynomial r;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                ExpVec e{};
                for (int k = 0; k < 8; ++k) e[k] = static_cast<uint8_t>(e1[k] + e2[k]);
                FieldScalar c = c1 * c2;
                auto it = r.terms.find(e);
                if (it == r.terms.end()) {
                    if (!c.is_zero()) r.terms.emplace(e, std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms.erase(it);
                }
            }
        return r;
    }
    SparsePolynomial scaled(const FieldScalar& c) const {
        SparsePolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [e, q] : terms) r.terms.emplace(e, q * c);
        return r;
    }

    // Substitute x -> M x; monomial structure keeps this a term-by-term rewrite.
    SparsePolynomial pullback(const Mono& M) const {
        SparsePolynomial r;
        for (const auto& [e, c] : terms) {
            ExpVec f{};
            FieldScalar coeff = c;
            for (int j = 0; j < 8; ++j)
                if (e[j]) {
                    // (Mx)_j = scale[q] * x_q with perm[q] = j
                    int q = -1;
                    for (int t = 0; t < 8; ++t)
                        if (M.perm[t] == j) {
                            q = t;
                            break;
                        }
                    f[q] = static_cast<uint8_t>(f[q] + e[j]);
                    FieldScalar s = M.scale[q].value();
                    for (int p = 0; p < e[j]; ++p) coeff *= s;
                }
            auto it = r.terms.find(f);
            if (it == r.terms.end()) {
                r.terms.emplace(f, coeff);
            } else {
                it->second += coeff;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
        return r;
    }

    // Divide by the leading coefficient (largest exponent vector in map order).
    SparsePolynomial normalized() const {
        QCY_CHECK(!terms.empty(), "normalize zero polynomial");
        return scaled(terms.rbegin()->second.inverse());
    }

    FieldScalar eval(const std::array<FieldScalar, 8>& x) const {
        FieldScalar v;
        for (const auto& [e, c] : terms) {
            FieldScalar t = c;
            for (int k = 0; k < 8; ++k)
                for (int p = 0; p < e[k]; ++p) t *= x[k];
            v += t;
        }
        return v;
    }

    SparsePolynomial partial(int idx) const {
        SparsePolynomial r;
        for (const auto& [e, c] : terms)
            if (e[idx]) {
                ExpVec f = e;
                --f[idx];
                r.terms.emplace(f, c * FieldScalar::integer(e[idx]));
            }
        return r;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& [e, c] : terms) {
            std::size_t t = 0;
            for (uint8_t v : e) t = hash_combine(t, v);
            h = hash_combine(h, hash_combine(t, c.hash()));
        }
        return h;
    }

    std::string str() const;
};

} // namespace qcy

#endif
