#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abexact/ring.hpp"

namespace abexact {

/// Row-major square matrix over an exact coefficient ring.
template <typename R>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, R()) {}

    static SquareMatrix from_rows(const std::vector<std::vector<R>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw std::invalid_argument("matrix rows of unequal length");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m.at(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t size() const { return n_; }

    R& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<R> a_;
};

/// Cofactor expansion along the first row; exact but factorial cost,
/// kept for small matrices and as an independent check on Bareiss.
template <typename R>
R determinant_cofactor(const SquareMatrix<R>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    if (n == 1) return m.at(0, 0);
    R det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        SquareMatrix<R> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        R term = m.at(0, j) * determinant_cofactor(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

/**
 * Fraction-free Bareiss elimination: every division is exact by the
 * Sylvester identity, so this works over any integral domain with an
 * exact_div, not just fields.  A zero pivot triggers a search for a
 * later row with a nonzero entry in the pivot column; each swap flips
 * the sign, and an empty column means the determinant is zero.
 */
template <typename R>
R determinant_bareiss(const SquareMatrix<R>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    SquareMatrix<R> a = m;
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k).is_zero()) ++r;
            if (r == n) return R();
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(k, c), a.at(r, c));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = exact_div(
                    a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            }
            a.at(i, k) = R();
        }
        prev = a.at(k, k);
    }
    R det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

/// Cofactor expansion below 5x5, Bareiss beyond.
template <typename R>
R determinant(const SquareMatrix<R>& m) {
    return m.size() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

}  // namespace abexact
