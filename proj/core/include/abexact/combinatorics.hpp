#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "abexact/rat.hpp"
#include "abexact/ring.hpp"

namespace abexact {

/// n! as an exact integer.
Int factorial(unsigned long n);

/// Binomial coefficient with the usual conventions: C(p, q) = 0 for
/// q < 0 or q > p, C(0, 0) = 1.  Negative p is a domain error.
Int binomial(long p, long q);

/**
 * Stirling number of the second kind via the explicit alternating sum
 *   S(n, k) = (1/k!) * sum_{j=0..k} (-1)^(k-j) C(k, j) j^n.
 *
 * The sum only represents S(n, k) for n >= 1; the boundary values
 * S(0, 0) = 1, S(n, 0) = 0 for n >= 1, and S(n, k) = 0 for k > n are
 * fixed separately so the conventions hold everywhere.
 */
Int stirling2_sum(unsigned long n, unsigned long k);

/// Triangle of Stirling numbers of the second kind built from the
/// recurrence S(n, k) = k S(n-1, k) + S(n-1, k-1); an oracle
/// independent of the alternating sum.
class StirlingTable {
public:
    explicit StirlingTable(unsigned long max_n);

    Int at(unsigned long n, unsigned long k) const;

    unsigned long max_n() const { return max_n_; }

private:
    unsigned long max_n_;
    std::vector<std::vector<Int>> rows_;
};

inline StirlingTable stirling2_table(unsigned long max_n) {
    return StirlingTable(max_n);
}

namespace detail {

void enumerate_bell_vectors(
    unsigned long n, unsigned long k,
    const std::function<void(const std::vector<unsigned long>&)>& emit);

/// n! / (prod l_i! * prod (i!)^l_i), exact by construction.
Int bell_multinomial(unsigned long n, const std::vector<unsigned long>& l);

}  // namespace detail

/**
 * Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) over any ring:
 *   sum over l_1 + l_2 + ... = k, 1*l_1 + 2*l_2 + ... = n of
 *   n! / (prod l_i! * prod (i!)^l_i) * prod x_i^l_i.
 *
 * The multinomial weight is computed as an exact integer before it
 * touches the ring.  The argument vector must hold exactly x_1 to
 * x_{n-k+1}; k > n yields zero (no valid block-size vector exists).
 */
template <typename R>
R bell_partial(unsigned long n, unsigned long k, std::span<const R> x) {
    if (k > n) return R();
    if (x.size() != n - k + 1) {
        throw std::invalid_argument("bell polynomial needs n-k+1 arguments");
    }
    if (n == 0) return R(1);
    if (k == 0) return R();

    R total;
    detail::enumerate_bell_vectors(
        n, k, [&](const std::vector<unsigned long>& l) {
            R term = from_rat<R>(Rat(detail::bell_multinomial(n, l)));
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (l[i] == 0) continue;
                term = term * ring_pow(x[i], l[i]);
            }
            total += term;
        });
    return total;
}

}  // namespace abexact
