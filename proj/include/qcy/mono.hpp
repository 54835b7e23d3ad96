#ifndef QCY_MONO_HPP
#define QCY_MONO_HPP

#include "qcy/field.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>

namespace qcy {

// Scales occurring in the symmetry group are all of the form i^k * sqrt2^m.
struct ScaleCode {
    int8_t k = 0;   // exponent of i, mod 4
    int8_t m = 0;   // exponent of sqrt2

    friend ScaleCode operator*(ScaleCode a, ScaleCode b) {
        return {static_cast<int8_t>((a.k + b.k) & 3), static_cast<int8_t>(a.m + b.m)};
    }
    ScaleCode inverse() const { return {static_cast<int8_t>((4 - k) & 3), static_cast<int8_t>(-m)}; }
    bool operator==(const ScaleCode&) const = default;

    FieldScalar value() const {
        // i^k * sqrt2^m over {1, sqrt2, i, i*sqrt2}
        int par = ((m % 2) + 2) % 2;
        int e = (m - par) / 2;
        Rational mag = e >= 0 ? Rational(Integer(1) << e) : Rational(1, Integer(1) << (-e));
        FieldScalar r;
        int slot = (k == 0 || k == 2) ? par : 2 + par;
        r.c[slot] = (k == 0 || k == 1) ? mag : -mag;
        return r;
    }

    // Order of value() under the lexicographic FieldScalar order, without rationals:
    // the value has a single nonzero basis coefficient at `slot` with sign and dyadic size.
    struct Key {
        int slot;
        int sgn;
        int e;
    };
    Key key() const {
        int par = ((m % 2) + 2) % 2;
        return {(k == 0 || k == 2) ? par : 2 + par, (k == 0 || k == 1) ? 1 : -1, (m - par) / 2};
    }

    static int compare(ScaleCode a, ScaleCode b) {
        Key x = a.key(), y = b.key();
        if (x.slot != y.slot) {
            // first differing coefficient index is min(slot); the one that is nonzero
            // there wins by its sign
            if (x.slot < y.slot) return x.sgn < 0 ? -1 : 1;
            return y.sgn < 0 ? 1 : -1;
        }
        if (x.sgn != y.sgn) return x.sgn < y.sgn ? -1 : 1;
        if (x.e == y.e) return 0;
        // positive: bigger exponent is bigger; negative: bigger exponent is smaller
        bool less = (x.sgn > 0) ? (x.e < y.e) : (x.e > y.e);
        return less ? -1 : 1;
    }

    static std::optional<ScaleCode> recognize(const FieldScalar& v);
};

// Monomial 8x8 matrix: column j holds scale[j] in row perm[j].
struct Mono {
    std::array<uint8_t, 8> perm{};
    std::array<ScaleCode, 8> scale{};

    static Mono identity() {
        Mono m;
        for (int j = 0; j < 8; ++j) m.perm[j] = static_cast<uint8_t>(j);
        return m;
    }

    bool operator==(const Mono&) const = default;

    friend Mono operator*(const Mono& a, const Mono& b) {   // a after b
        Mono r;
        for (int j = 0; j < 8; ++j) {
            r.perm[j] = a.perm[b.perm[j]];
            r.scale[j] = b.scale[j] * a.scale[b.perm[j]];
        }
        return r;
    }

    Mono inverse() const {
        Mono r;
        for (int j = 0; j < 8; ++j) {
            r.perm[perm[j]] = static_cast<uint8_t>(j);
            r.scale[perm[j]] = scale[j].inverse();
        }
        return r;
    }

    Mono times_i(int j) const {   // multiply by i^j
        Mono r = *this;
        for (auto& s : r.scale) s.k = static_cast<int8_t>((s.k + j) & 3);
        return r;
    }

    Mono times_sqrt2_pow(int b) const {
        Mono r = *this;
        for (auto& s : r.scale) s.m = static_cast<int8_t>(s.m + b);
        return r;
    }

    // Scale-product sqrt2 exponent; a Z-coset invariant. Group elements have 0,
    // displayed projective representatives may carry a multiple of 8.
    int sqrt2_weight() const {
        int w = 0;
        for (const auto& s : scale) w += s.m;
        return w;
    }

    bool is_scalar() const {
        for (int j = 0; j < 8; ++j)
            if (perm[j] != j || !(scale[j] == scale[0])) return false;
        return true;
    }

    // Canonical lift of the Z-coset {i^j * M}: minimize the column-0 scale under
    // the FieldScalar total order.
    Mono canonical() const {
        int best = 0;
        ScaleCode s0 = scale[0];
        for (int j = 1; j < 4; ++j) {
            ScaleCode cand{static_cast<int8_t>((s0.k + j) & 3), s0.m};
            ScaleCode cur{static_cast<int8_t>((s0.k + best) & 3), s0.m};
            if (ScaleCode::compare(cand, cur) < 0) best = j;
        }
        return best == 0 ? *this : times_i(best);
    }

    std::size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint8_t b) {
            h ^= b;
            h *= 1099511628211ull;
        };
        for (int j = 0; j < 8; ++j) {
            mix(perm[j]);
            mix(static_cast<uint8_t>(scale[j].k));
            mix(static_cast<uint8_t>(scale[j].m));
        }
        return static_cast<std::size_t>(h);
    }

    // Entry at (row, col); zero unless row == perm[col].
    FieldScalar entry(int row, int col) const {
        if (perm[col] != row) return FieldScalar::zero();
        return scale[col].value();
    }

    std::string str() const;
    static Mono parse(const std::string& line);
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const { return m.hash(); }
};

} // namespace qcy

#endif
