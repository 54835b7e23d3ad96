#include "qcy/field.hpp"

#include <sstream>

namespace qcy {

FieldScalar FieldScalar::inverse() const {
    QCY_CHECK(!is_zero(), "division by zero in Q(i,sqrt2)");
    // Multiply by the three Galois conjugates; the full product is rational.
    FieldScalar b = conj_i();
    FieldScalar n = *this * b;          // lands in Q(sqrt2)
    FieldScalar m = n.conj_sqrt2();
    FieldScalar full = n * m;           // rational
    QCY_CHECK(full.is_rational() && full.c[0] != 0, "inverse: norm not rational");
    Rational inv = Rational(1) / full.c[0];
    FieldScalar r = b * m;
    for (auto& q : r.c) q *= inv;
    return r;
}

FieldScalar FieldScalar::parse(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    FieldScalar r;
    for (int k = 0; k < 4; ++k) {
        QCY_CHECK(static_cast<bool>(in >> tok), "FieldScalar::parse: expected 4 fractions");
        r.c[k] = rat_parse(tok);
    }
    return r;
}

std::complex<double> complex_embedding(const FieldScalar& x, int precision_bits) {
    QCY_CHECK(precision_bits > 0 && precision_bits <= 48,
              "complex_embedding: precision out of supported range");
    return x.embed();
}

} // namespace qcy
