#pragma once

#include <stdexcept>
#include <type_traits>

#include "abexact/rat.hpp"

namespace abexact {

/**
 * Conventions shared by every coefficient ring in this library:
 *   - default construction yields the additive identity,
 *   - R(1) yields the multiplicative identity,
 *   - is_zero(), operator==, to_string() are members,
 *   - exact_div(a, b) and ring_inverse(a) are free functions found by ADL.
 */

/// Embeds a rational scalar into R, descending through nested
/// coefficient rings (exposed as R::coeff_type) until one accepts it.
template <typename R>
R from_rat(const Rat& q) {
    if constexpr (std::is_constructible_v<R, const Rat&>) {
        return R(q);
    } else {
        return R(from_rat<typename R::coeff_type>(q));
    }
}

/// base^e by repeated squaring; e = 0 yields R(1).
template <typename R>
R ring_pow(R base, unsigned long e) {
    R acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

}  // namespace abexact
