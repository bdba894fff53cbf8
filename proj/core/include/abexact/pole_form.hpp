#pragma once

#include <cstddef>
#include <string>

#include "abexact/poly.hpp"
#include "abexact/rat.hpp"

namespace abexact {

/**
 * Element of Q[z] localized at (z-1): a value num(z) / (z-1)^pole_order.
 *
 * Normal form, established by every constructor:
 *   - pole_order == 0, or
 *   - num(1) != 0, i.e. no factor of (z-1) cancels against the pole;
 *   - zero is num == 0 with pole_order == 0.
 *
 * The units of this ring are exactly c * (z-1)^k with c a nonzero
 * rational and k any integer; ring_inverse accepts those and nothing
 * else.
 */
class PoleForm {
public:
    PoleForm() = default;
    explicit PoleForm(long c) : num_(ZPoly(c)) {}
    explicit PoleForm(const Rat& c) : num_(ZPoly(c)) {}
    explicit PoleForm(ZPoly num) : num_(std::move(num)) {}
    PoleForm(ZPoly num, std::size_t pole_order);

    const ZPoly& num() const { return num_; }
    std::size_t pole_order() const { return e_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const PoleForm& a, const PoleForm& b) {
        return a.e_ == b.e_ && a.num_ == b.num_;
    }
    friend bool operator!=(const PoleForm& a, const PoleForm& b) {
        return !(a == b);
    }

    friend PoleForm operator+(const PoleForm& a, const PoleForm& b);
    friend PoleForm operator-(const PoleForm& a, const PoleForm& b);
    friend PoleForm operator*(const PoleForm& a, const PoleForm& b);
    PoleForm operator-() const;

    PoleForm& operator+=(const PoleForm& o) { *this = *this + o; return *this; }
    PoleForm& operator-=(const PoleForm& o) { *this = *this - o; return *this; }
    PoleForm& operator*=(const PoleForm& o) { *this = *this * o; return *this; }

    /// Substitutes a rational z; the pole makes z = 1 a domain error.
    Rat eval(const Rat& z) const;

    /// "num", "num/(z-1)" or "num/(z-1)^e"; a numerator that would
    /// mis-parse next to the '/' is parenthesized.
    std::string to_string() const;

private:
    ZPoly num_;
    std::size_t e_ = 0;
};

/// Inverse of a unit c*(z-1)^k; anything else is a domain error.
PoleForm ring_inverse(const PoleForm& a);

/// Division within the ring; throws std::domain_error when the quotient
/// would need a denominator other than a power of (z-1).
PoleForm exact_div(const PoleForm& a, const PoleForm& b);

/// The polynomial z - 1.
ZPoly z_minus_one();

/// An Apostol-Bernoulli polynomial: coefficients of powers of u live in
/// the localized ring, carrying the (z-1) poles exactly.
using ABPoly = UPoly<PoleForm>;

}  // namespace abexact
