#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace abexact {

using Int = mpz_class;

/**
 * Arbitrary-precision rational, always kept in canonical form
 * (coprime numerator/denominator, denominator > 0).
 *
 * Wraps mpq_class because the GMP string and two-integer constructors
 * do not canonicalize on their own; every entry point here does.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(long num, long den);
    Rat(const Int& num, const Int& den);

    /// Parses "p" or "p/q" with optional leading '-'.
    /// Throws std::invalid_argument on malformed input,
    /// std::domain_error on a zero denominator.
    static Rat parse(const std::string& text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Field division; throws std::domain_error when b is zero.
Rat exact_div(const Rat& a, const Rat& b);

/// Multiplicative inverse; throws std::domain_error when a is zero.
Rat ring_inverse(const Rat& a);

}  // namespace abexact
