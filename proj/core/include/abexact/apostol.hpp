#pragma once

#include <vector>

#include "abexact/derivative.hpp"
#include "abexact/pole_form.hpp"
#include "abexact/poly.hpp"
#include "abexact/rat.hpp"

namespace abexact {

/**
 * Apostol-Bernoulli polynomials B_n(u,z) and numbers B_n(z) = B_n(0,z),
 * generated by x e^{ux} / (z e^x - 1).  Everything here assumes z != 1;
 * symbolic results carry their (z-1) poles exactly as ABPoly/PoleForm.
 * B_0(u,z) = 0 throughout (the generating function vanishes at x = 0),
 * in contrast to the classical B_0 = 1 at z = 1; the z = 1 case
 * belongs to the classical module.
 *
 * Routes provided: a Stirling double sum, a Stirling single sum, the
 * u-monomial single-sum form, the triangular row sum, bivariate
 * determinants, the truncated series of the generating function, and
 * the two derivative pathways (Bell-polynomial composition and the
 * quotient determinant) fed through the d/dx [x F(x)] step.
 */

enum class ApostolFormula { stirling, determinant, monomial, series };

/// B_n(u,z) = n sum_{k=0..n-1} (-1)^k k!/(z-1)^{k+1} sum_{r+s=k}
/// sum_{l+m=n-1} (-1)^{s+m} C(n-1,l) z^r (1-u)^l u^m S(l,r) S(m,s),
/// accumulated over the common pole (z-1)^n and normalized once per
/// u-coefficient.  n = 0 gives the zero polynomial.
ABPoly apostol_poly_stirling_sum(unsigned long n);

/// B_n(z) = n sum_{k=0..n-1} (-1)^k k!/(z-1)^{k+1} z^k S(n-1,k).
PoleForm apostol_number_stirling_sum(unsigned long n);

/// B_{n+1}(u,z) = (-1)^n (n+1)/(z-1)^{n+1} det[ C(l,m)(z(1-u)^{l-m}
/// - (-u)^{l-m}) ], rows l=1..n, cols m=0..n-1.  The parameter is the
/// determinant size n; the result carries index n+1.  n = 0 is the
/// empty determinant (= 1), giving B_1 = 1/(z-1).
ABPoly apostol_poly_determinant(unsigned long n);

/// B_{n+1}(z) = (-1)^n (n+1)/(z-1)^{n+1} det[ C(l,m)(z - delta_{lm}) ].
PoleForm apostol_number_determinant(unsigned long n);

/// B_n(u,z) = sum_{k=0..n} k C(n,k) sum_{j=0..k-1} (-1)^j z^j j!
/// S(k-1,j) / (z-1)^{j+1} * u^{n-k}: one u-monomial per k.
ABPoly apostol_poly_monomial_sum(unsigned long n);

/// B_n(z) = (-1)^{n-1} n sum_{k=1..n} (k-1)!/(z-1)^k S(n,k); n >= 1.
PoleForm apostol_number_row_sum(unsigned long n);

/// B_0(u,z)..B_n_max(u,z) read off x e^{ux} / (z e^x - 1) with z kept
/// symbolic; entry n is n! times the x^n series coefficient.
std::vector<ABPoly> apostol_poly_series_table(unsigned long n_max);

/// Same series at a rational z != 1 (z = 1 is refused: that limit is
/// the classical module's series).
std::vector<UPolyRat> apostol_poly_series_table_at(unsigned long n_max,
                                                   const Rat& z);

/// Number specialization (u = 0) of the at-point series.
std::vector<Rat> apostol_number_series_table_at(unsigned long n_max,
                                                const Rat& z);

/// Derivatives at 0 of the denominator g(x) = z e^{(1-u)x} - e^{-ux}:
/// entry j is z(1-u)^j - (-u)^j, encoded in closed form.
DerivSeq<ABPoly> apostol_denominator_derivs(unsigned long n);

/// The same derivatives with rational z, u substituted.
DerivSeq<Rat> apostol_denominator_derivs_at(unsigned long n, const Rat& z,
                                            const Rat& u);

/// B_n(u,z) as n * (1/g)^{(n-1)}(0) with the composite derivative taken
/// by Bell polynomials; exercises the first proof pathway end to end.
ABPoly apostol_poly_via_bell(unsigned long n);

/// Same value through the quotient-derivative determinant pathway.
ABPoly apostol_poly_via_quotient(unsigned long n);

/// Point instantiations of the two pathways (z != 1).
Rat apostol_via_bell_at(unsigned long n, const Rat& z, const Rat& u);
Rat apostol_via_quotient_at(unsigned long n, const Rat& z, const Rat& u);

/// Evaluates a symbolic result at rational z != 1 and u.
Rat apostol_poly_eval(const ABPoly& p, const Rat& z, const Rat& u);

/// B_n(u,z) at a rational point through the chosen formula; z = 1 is a
/// domain error, n = 0 returns 0 for every formula.
Rat apostol_eval(unsigned long n, const Rat& z, const Rat& u,
                 ApostolFormula formula);

}  // namespace abexact
