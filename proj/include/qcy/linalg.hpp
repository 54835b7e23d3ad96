#ifndef QCY_LINALG_HPP
#define QCY_LINALG_HPP

#include "qcy/field.hpp"

#include <optional>
#include <vector>

namespace qcy {

inline bool fld_is_zero(const Rational& x) { return x == 0; }
inline bool fld_is_zero(const FieldScalar& x) { return x.is_zero(); }
inline Rational fld_inv(const Rational& x) { return Rational(1) / x; }
inline FieldScalar fld_inv(const FieldScalar& x) { return x.inverse(); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && fld_is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        T inv = fld_inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || fld_is_zero(m[i][c])) continue;
            T f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Matrix<T> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right null space (each vector has length = #cols).
template <class T>
Matrix<T> nullspace(Matrix<T> m, const T& zero, const T& unit) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix<T> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(cols, zero);
        v[free] = unit;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = zero - m[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Least structured solver: A x = b, returns a solution if consistent.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b, const T& zero) {
    std::size_t rows = a.size();
    QCY_CHECK(rows == b.size(), "solve_linear: shape mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<T> x(cols, zero);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = a[pr][cols];
    return x;
}

} // namespace qcy

#endif
