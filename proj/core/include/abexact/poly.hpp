#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abexact/rat.hpp"
#include "abexact/ring.hpp"

namespace abexact {

struct u_var {
    static constexpr const char* name = "u";
};
struct z_var {
    static constexpr const char* name = "z";
};

/**
 * Dense univariate polynomial over a coefficient ring R, tagged with a
 * variable so polynomials in different indeterminates cannot be mixed
 * by accident.
 *
 * Representation invariant: coeffs_[k] is the coefficient of x^k and the
 * vector never ends in a zero.  The zero polynomial is the empty vector,
 * and its degree is reported as nullopt rather than any sentinel number.
 */
template <typename R, typename Var>
class Poly {
public:
    using coeff_type = R;

    Poly() = default;
    explicit Poly(long c) : Poly(R(c)) {}
    explicit Poly(const R& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    /// Coefficients in ascending order, index = degree.  Trailing zeros
    /// are trimmed, so any input denotes a unique polynomial.
    static Poly from_coeffs(std::vector<R> cs) {
        Poly p;
        p.coeffs_ = std::move(cs);
        p.trim();
        return p;
    }

    static Poly monomial(const R& c, std::size_t k) {
        Poly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, R());
            p.coeffs_[k] = c;
        }
        return p;
    }

    static Poly variable() { return monomial(R(1), 1); }

    const std::vector<R>& coeffs() const { return coeffs_; }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    R coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : R();
    }

    /// Leading coefficient; the zero polynomial has none.
    const R& leading() const {
        if (coeffs_.empty()) {
            throw std::domain_error("leading coefficient of zero polynomial");
        }
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), R());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
        return from_coeffs(std::move(cs));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly p;
        p.coeffs_.reserve(coeffs_.size());
        for (const R& c : coeffs_) p.coeffs_.push_back(-c);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> cs(a.coeffs_.size() + b.coeffs_.size() - 1, R());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(std::move(cs));
    }

    friend Poly operator*(const Poly& a, const R& s) { return a * Poly(s); }
    friend Poly operator*(const R& s, const Poly& a) { return Poly(s) * a; }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Multiplication by x^k.
    Poly times_monomial(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly p;
        p.coeffs_.assign(k, R());
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    Poly derivative() const {
        std::vector<R> cs;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            cs.push_back(R(static_cast<long>(k)) * coeffs_[k]);
        }
        return from_coeffs(std::move(cs));
    }

    /// Horner evaluation in any ring T that can embed the coefficients.
    template <typename T>
    T eval(const T& x) const {
        T acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + T(coeffs_[i]);
        }
        return acc;
    }

    /// Applies f to every coefficient, producing a polynomial over the
    /// image ring in the same variable.
    template <typename F>
    auto map(F f) const {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> cs;
        cs.reserve(coeffs_.size());
        for (const R& c : coeffs_) cs.push_back(f(c));
        return Poly<S, Var>::from_coeffs(std::move(cs));
    }

    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

namespace detail {

/// A coefficient needs parentheses when juxtaposing it with "*x^k" or a
/// joining sign would mis-parse: any interior '+'/'-', or any '*' or '/'.
inline bool coeff_needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '*' || c == '/') return true;
        if ((c == '+' || c == '-') && i > 0) return true;
    }
    return false;
}

/// Joins "+-" produced by negative leading coefficients into "-".
inline std::string join_terms(const std::vector<std::string>& terms) {
    std::string out;
    for (const std::string& t : terms) {
        if (!out.empty() && !(t.size() > 0 && t[0] == '-')) out += '+';
        out += t;
    }
    return out;
}

}  // namespace detail

template <typename R, typename Var>
std::string Poly<R, Var>::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::string> terms;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const R& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string power;
        if (i == 1) {
            power = Var::name;
        } else if (i > 1) {
            power = std::string(Var::name) + "^" + std::to_string(i);
        }
        if (power.empty()) {
            terms.push_back(c.to_string());
        } else if (c == R(1)) {
            terms.push_back(power);
        } else if (c == R(-1)) {
            terms.push_back("-" + power);
        } else {
            std::string cs = c.to_string();
            if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
            terms.push_back(cs + "*" + power);
        }
    }
    return detail::join_terms(terms);
}

/// Exact polynomial division: returns q with a = q*b, and refuses any
/// pair that leaves a remainder.  Coefficient divisions go through the
/// ring's own exact_div.
template <typename R, typename Var>
Poly<R, Var> exact_div(const Poly<R, Var>& a, const Poly<R, Var>& b) {
    using P = Poly<R, Var>;
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return P();
    const std::size_t db = *b.degree();
    P rem = a;
    std::vector<R> q(*a.degree() >= db ? *a.degree() - db + 1 : 0, R());
    while (!rem.is_zero() && *rem.degree() >= db) {
        const std::size_t dq = *rem.degree() - db;
        R qc = exact_div(rem.leading(), b.leading());
        q[dq] = qc;
        rem = rem - P::monomial(qc, dq) * b;
    }
    if (!rem.is_zero()) {
        throw std::domain_error("inexact polynomial division");
    }
    return P::from_coeffs(std::move(q));
}

/// Inverse exists only for invertible constants.
template <typename R, typename Var>
Poly<R, Var> ring_inverse(const Poly<R, Var>& p) {
    if (p.degree() != std::optional<std::size_t>(0)) {
        throw std::domain_error("polynomial is not an invertible constant");
    }
    return Poly<R, Var>(ring_inverse(p.coeff(0)));
}

/// Polynomials in the Apostol parameter z over the rationals.
using ZPoly = Poly<Rat, z_var>;

/// Polynomials in the argument u over an arbitrary coefficient ring.
template <typename R>
using UPoly = Poly<R, u_var>;

using UPolyRat = UPoly<Rat>;

/// Bivariate values: u outside, z inside.
using UZPoly = UPoly<ZPoly>;

}  // namespace abexact
