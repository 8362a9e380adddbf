#ifndef CRITCERT_MATRIX_HPP
#define CRITCERT_MATRIX_HPP

#include <vector>

#include "critcert/rational.hpp"

namespace critcert {

// Dense square rational matrix; small (n <= 8 or so).
struct MatrixQ {
    std::size_t n = 0;
    std::vector<Rational> entries;  // row-major

    MatrixQ() = default;
    explicit MatrixQ(std::size_t dim) : n(dim), entries(dim * dim, Rational(0)) {}

    static MatrixQ identity(std::size_t dim);

    Rational& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

    Rational determinant() const;
    std::size_t rank() const;
    bool is_identity() const;

    // Characteristic polynomial coefficients c_0..c_n of det(tI - M),
    // ascending. Faddeev-LeVerrier, exact.
    std::vector<Rational> char_poly() const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

// Eigenvalue sign counts of a symmetric rational matrix, computed exactly
// from Descartes' rule on the characteristic polynomial (all roots real).
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};
Inertia symmetric_inertia(const MatrixQ& m);

}  // namespace critcert

#endif
