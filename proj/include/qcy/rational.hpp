#ifndef QCY_RATIONAL_HPP
#define QCY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

#define QCY_CHECK(cond, msg)                                                   \
    do {                                                                       \
        if (!(cond)) throw std::runtime_error(std::string("qcy: ") + (msg));   \
    } while (0)

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "n/d" with d > 0 and gcd(n,d) = 1; integers print as "n/1" for a fixed width-free format.
inline std::string rat_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
    QCY_CHECK(d > 0, "rational with non-positive denominator: " + s);
    return Rational(n, d);
}

inline std::size_t hash_combine(std::size_t h, std::size_t k) {
    return h ^ (k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

inline std::size_t rat_hash(const Rational& q) {
    // Numerator/denominator fit in a machine word in every hot path; fall back to strings.
    const Integer &n = numerator(q), &d = denominator(q);
    std::size_t h = 0;
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX)
        h = hash_combine(std::hash<int64_t>{}(static_cast<int64_t>(n)),
                         std::hash<int64_t>{}(static_cast<int64_t>(d)));
    else
        h = std::hash<std::string>{}(n.str() + "/" + d.str());
    return h;
}

inline double rat_double(const Rational& q) { return static_cast<double>(q); }

} // namespace qcy

#endif
