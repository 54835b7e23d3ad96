#include "qcy/mono.hpp"

#include <sstream>

namespace qcy {

std::optional<ScaleCode> ScaleCode::recognize(const FieldScalar& v) {
    if (v.is_zero()) return std::nullopt;
    for (int k = 0; k < 4; ++k)
        for (int m = -16; m <= 16; ++m) {
            ScaleCode c{static_cast<int8_t>(k), static_cast<int8_t>(m)};
            if (c.value() == v) return c;
        }
    return std::nullopt;
}

std::string Mono::str() const {
    std::ostringstream out;
    for (int j = 0; j < 8; ++j) out << (j ? " " : "") << static_cast<int>(perm[j]);
    for (int j = 0; j < 8; ++j) out << " ; " << scale[j].value().str();
    return out.str();
}

Mono Mono::parse(const std::string& line) {
    std::istringstream in(line);
    Mono m;
    std::array<bool, 8> seen{};
    for (int j = 0; j < 8; ++j) {
        int p;
        QCY_CHECK(static_cast<bool>(in >> p) && p >= 0 && p < 8, "Mono::parse: bad permutation");
        m.perm[j] = static_cast<uint8_t>(p);
        QCY_CHECK(!seen[p], "Mono::parse: permutation not a bijection");
        seen[p] = true;
    }
    for (int j = 0; j < 8; ++j) {
        std::string sep, t0, t1, t2, t3;
        QCY_CHECK(static_cast<bool>(in >> sep >> t0 >> t1 >> t2 >> t3) && sep == ";",
                  "Mono::parse: bad scale block");
        FieldScalar v = FieldScalar::parse(t0 + " " + t1 + " " + t2 + " " + t3);
        auto code = ScaleCode::recognize(v);
        QCY_CHECK(code.has_value(), "Mono::parse: scale not of the form i^k sqrt2^m");
        m.scale[j] = *code;
    }
    return m;
}

} // namespace qcy
