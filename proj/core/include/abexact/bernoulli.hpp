#pragma once

#include <vector>

#include "abexact/poly.hpp"
#include "abexact/rat.hpp"

namespace abexact {

/**
 * Classical Bernoulli numbers B_n and polynomials B_n(u), each through
 * several independent routes:
 *
 *   - a composition sum over weighted integer partitions,
 *   - a single sum of Stirling numbers with binomial-ratio weights,
 *   - a double sum over Stirling products in the (1-u), u bases,
 *   - determinants with binomial entries,
 *   - the generating-function series x e^{ux} / (e^x - 1), and
 *   - the classical recurrence, used as the independent oracle.
 *
 * The closed forms are defined for n >= 1 and refuse n = 0; B_0 = 1
 * comes from the recurrence or the series.
 */

/// The composition sum enumerates all weighted partitions of n; the
/// term count explodes past this index, so larger n is refused.
inline constexpr unsigned long kCompositionSumMaxN = 25;

/// B_0..B_n_max by the recurrence sum_{k=0..n} C(n+1,k) B_k = 0.
std::vector<Rat> bernoulli_recurrence_table(unsigned long n_max);

/// Single value from the recurrence table.
Rat bernoulli_recurrence(unsigned long n);

/// B_0(u)..B_n_max(u) read off the series x e^{ux}/(e^x - 1) with the
/// shared factor x cancelled before dividing; entry n is n! times the
/// x^n coefficient.
std::vector<UPolyRat> bernoulli_poly_series_table(unsigned long n_max);

UPolyRat bernoulli_poly_series(unsigned long n);

/// Number specialization of the series oracle (u = 0).
std::vector<Rat> bernoulli_number_series_table(unsigned long n_max);

Rat bernoulli_number_series(unsigned long n);

/// B_n = n! sum_{j=1..n} (-1)^j sum over i-vectors with sum i_t = j,
/// sum t*i_t = n of j!/(prod i_t!) / prod (t+1)!^{i_t}.
/// Defined for 1 <= n <= kCompositionSumMaxN.
Rat bernoulli_number_composition_sum(unsigned long n);

/// B_n = sum_{i=1..n} (-1)^i C(n+1,i+1)/C(n+i,i) S(n+i,i), n >= 1.
Rat bernoulli_number_stirling_sum(unsigned long n);

/// B_n = (-1)^n det[ C(l+1,m)/(l+1) ], rows l=1..n, cols m=0..n-1;
/// n >= 1.
Rat bernoulli_number_determinant(unsigned long n);

/// B_n(u) as the quadruple sum over (k, r+s=k, l+m=n) with the inner
/// Stirling-product double sum taken as an exact integer, every
/// (1-u)^(l+r) expanded into the u-power basis; n >= 1.
UPolyRat bernoulli_poly_stirling_sum(unsigned long n);

/// B_n(u) = (-1)^n det[ C(l+1,m)/(l+1) * ((1-u)^(l-m+1) - (-u)^(l-m+1)) ],
/// rows l=1..n, cols m=0..n-1, computed over the u-polynomial ring;
/// n >= 1.
UPolyRat bernoulli_poly_determinant(unsigned long n);

}  // namespace abexact
