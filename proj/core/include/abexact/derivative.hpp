#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "abexact/combinatorics.hpp"
#include "abexact/matrix.hpp"
#include "abexact/rat.hpp"
#include "abexact/ring.hpp"

namespace abexact {

/// Derivatives of one function at one point: entry j holds the j-th
/// derivative, entry 0 the value itself.
template <typename R>
using DerivSeq = std::vector<R>;

/**
 * n-th derivative of a composite f(g(x)) at x0 by Faa di Bruno:
 *   sum_{k=0..n} f^(k)(g(x0)) * B_{n,k}(g'(x0), ..., g^(n-k+1)(x0)).
 *
 * f_at_g[k] must hold f^(k) already evaluated at g(x0); g[j] holds
 * g^(j)(x0).  The k = 0 term is f(g(x0)) for n = 0 and vanishes for
 * n >= 1, so g is never read past index n.
 */
template <typename R>
R faa_di_bruno(const DerivSeq<R>& f_at_g, const DerivSeq<R>& g,
               unsigned long n) {
    if (f_at_g.size() < n + 1) {
        throw std::invalid_argument("faa di bruno needs f derivatives 0..n");
    }
    if (g.size() < n + 1) {
        throw std::invalid_argument("faa di bruno needs g derivatives 0..n");
    }
    if (n == 0) return f_at_g[0];
    R total;
    for (unsigned long k = 1; k <= n; ++k) {
        std::span<const R> args(g.data() + 1, n - k + 1);
        total += f_at_g[k] * bell_partial<R>(n, k, args);
    }
    return total;
}

/**
 * n-th derivative of a quotient mu/nu at a point, as the determinant
 * identity (-1)^n * det[A | B] / nu^(n+1) with A the column of mu
 * derivatives 0..n and b_{l,m} = C(l,m) * nu^(l-m) for columns
 * m = 0..n-1, zero above the diagonal band.
 */
template <typename R>
R quotient_derivative(const DerivSeq<R>& mu, const DerivSeq<R>& nu,
                      unsigned long n) {
    if (mu.size() < n + 1 || nu.size() < n + 1) {
        throw std::invalid_argument(
            "quotient derivative needs derivatives 0..n of both functions");
    }
    const R inv_nu0 = ring_inverse(nu[0]);
    SquareMatrix<R> m(n + 1);
    for (unsigned long l = 0; l <= n; ++l) {
        m.at(l, 0) = mu[l];
        for (unsigned long c = 1; c <= n; ++c) {
            const unsigned long mm = c - 1;
            if (l < mm) continue;
            m.at(l, c) =
                from_rat<R>(Rat(binomial(static_cast<long>(l),
                                         static_cast<long>(mm)))) *
                nu[l - mm];
        }
    }
    R det = determinant(m);
    if (n % 2 == 1) det = -det;
    return det * ring_pow(inv_nu0, n + 1);
}

/// n-th derivative of x * F(x) at 0 given F's derivatives at 0:
/// the Leibniz sum collapses to n * F^(n-1)(0), and to 0 for n = 0.
template <typename R>
R leibniz_x_times(const DerivSeq<R>& f, unsigned long n) {
    if (n == 0) return R();
    if (f.size() < n) {
        throw std::invalid_argument("leibniz step needs derivatives 0..n-1");
    }
    return from_rat<R>(Rat(static_cast<long>(n))) * f[n - 1];
}

/// Derivatives of y -> 1/y at y0: entry k is (-1)^k k! / y0^(k+1).
/// y0 must be a unit in R.
template <typename R>
DerivSeq<R> reciprocal_derivs(const R& y0, unsigned long n) {
    const R inv = ring_inverse(y0);
    DerivSeq<R> f;
    f.reserve(n + 1);
    f.push_back(inv);
    for (unsigned long k = 1; k <= n; ++k) {
        f.push_back(f.back() * inv * from_rat<R>(Rat(-static_cast<long>(k))));
    }
    return f;
}

}  // namespace abexact
