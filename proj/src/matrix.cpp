#include "critcert/matrix.hpp"

#include <stdexcept>

namespace critcert {

MatrixQ MatrixQ::identity(std::size_t dim) {
    MatrixQ m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

bool MatrixQ::is_identity() const {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Rational MatrixQ::determinant() const {
    MatrixQ m = *this;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sign(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sign(m.at(i, col)) == 0) continue;
            Rational factor = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

std::size_t MatrixQ::rank() const {
    MatrixQ m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && sign(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (sign(m.at(i, col)) == 0) continue;
            Rational factor = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> MatrixQ::char_poly() const {
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    MatrixQ mk = *this;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            MatrixQ next(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Rational s(0);
                    for (std::size_t l = 0; l < n; ++l) {
                        Rational m = mk.at(l, j);
                        if (l == j) m += coeffs[n - k + 1];
                        s += at(i, l) * m;
                    }
                    next.at(i, j) = s;
                }
            mk = next;
        }
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        coeffs[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return coeffs;
}

std::vector<Rational> MatrixQ::apply(const std::vector<Rational>& x) const {
    if (x.size() != n) throw std::invalid_argument("matrix apply: size mismatch");
    std::vector<Rational> y(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
    return y;
}

Inertia symmetric_inertia(const MatrixQ& m) {
    std::vector<Rational> c = m.char_poly();
    // Zero eigenvalues: multiplicity of the root 0 = number of trailing zeros.
    std::size_t zeros = 0;
    while (zeros < c.size() - 1 && sign(c[zeros]) == 0) ++zeros;
    // Positive roots of p(t)/t^zeros by Descartes (exact: all roots real).
    std::size_t pos = 0;
    int last = 0;
    for (std::size_t i = zeros; i < c.size(); ++i) {
        int s = sign(c[i]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++pos;
        last = s;
    }
    Inertia r;
    r.zero = zeros;
    r.positive = pos;
    r.negative = m.n - zeros - pos;
    return r;
}

}  // namespace critcert
