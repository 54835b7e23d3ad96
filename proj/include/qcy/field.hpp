#ifndef QCY_FIELD_HPP
#define QCY_FIELD_HPP

#include "qcy/rational.hpp"

#include <array>
#include <complex>
#include <compare>
#include <string>

namespace qcy {

// Element of Q(i, sqrt2) written over the basis {1, sqrt2, i, i*sqrt2}.
// The representation is unique, so equality and hashing are coefficient-wise.
struct FieldScalar {
    std::array<Rational, 4> c{};   // c0 + c1*sqrt2 + c2*i + c3*i*sqrt2

    FieldScalar() = default;
    explicit FieldScalar(Rational c0) { c[0] = std::move(c0); }
    FieldScalar(Rational c0, Rational c1, Rational c2, Rational c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static FieldScalar zero() { return FieldScalar{}; }
    static FieldScalar one() { return FieldScalar{Rational(1)}; }
    static FieldScalar integer(long n) { return FieldScalar{Rational(n)}; }
    static FieldScalar i() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static FieldScalar sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

    bool operator==(const FieldScalar& o) const { return c == o.c; }
    bool operator!=(const FieldScalar& o) const { return c != o.c; }

    FieldScalar operator+(const FieldScalar& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    FieldScalar operator-(const FieldScalar& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    FieldScalar operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    FieldScalar operator*(const FieldScalar& o) const {
        const auto& a = c;
        const auto& b = o.c;
        return {a[0] * b[0] + 2 * (a[1] * b[1]) - a[2] * b[2] - 2 * (a[3] * b[3]),
                a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3]) + 2 * (a[3] * b[1]),
                a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
    }

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar conj_i() const { return {c[0], c[1], -c[2], -c[3]}; }     // i -> -i
    FieldScalar conj_sqrt2() const { return {c[0], -c[1], c[2], -c[3]}; } // sqrt2 -> -sqrt2

    FieldScalar inverse() const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

    // Lexicographic order on the coefficient tuple; total, used for canonicalization.
    int compare(const FieldScalar& o) const {
        for (int k = 0; k < 4; ++k) {
            if (c[k] < o.c[k]) return -1;
            if (c[k] > o.c[k]) return 1;
        }
        return 0;
    }
    bool operator<(const FieldScalar& o) const { return compare(o) < 0; }

    std::complex<double> embed() const {
        static const double s2 = 1.4142135623730950488;
        return {rat_double(c[0]) + s2 * rat_double(c[1]),
                rat_double(c[2]) + s2 * rat_double(c[3])};
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& q : c) h = hash_combine(h, rat_hash(q));
        return h;
    }

    // Four reduced fractions "n/d" in basis order, space separated.
    std::string str() const {
        return rat_str(c[0]) + " " + rat_str(c[1]) + " " + rat_str(c[2]) + " " + rat_str(c[3]);
    }
    static FieldScalar parse(const std::string& s);
};

struct FieldScalarHash {
    std::size_t operator()(const FieldScalar& x) const { return x.hash(); }
};

// embed() to a requested accuracy: coefficients are exact, so only the sqrt2
// constant and the final double rounding matter; 2^-precision is honoured for
// precision <= 48.
std::complex<double> complex_embedding(const FieldScalar& x, int precision_bits);

} // namespace qcy

#endif
