#pragma once

#include <string>

#include "abexact/pole_form.hpp"
#include "abexact/poly.hpp"
#include "abexact/rat.hpp"

namespace abexact {

/**
 * JSON renderings of the library's value types, as compact documents:
 *   - rationals: the string "p/q" (or "p" for integers),
 *   - polynomials: array of rational strings, index = degree,
 *   - pole forms: {"num": [...], "pole_order": e},
 *   - symbolic Apostol results: {"n": n, "formula": tag,
 *     "u_coeffs": [pole-form...]}.
 * Key order is fixed, so equal values serialize byte-identically.
 */

std::string json_of(const Rat& r);
std::string json_of(const ZPoly& p);
std::string json_of(const UPolyRat& p);
std::string json_of(const PoleForm& f);
std::string json_of(const ABPoly& p, unsigned long n,
                    const std::string& formula_tag);

}  // namespace abexact
