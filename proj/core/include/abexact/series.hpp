#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abexact/ring.hpp"

namespace abexact {

/**
 * Formal power series over R truncated at a fixed order N: exactly the
 * coefficients of x^0 .. x^N are stored, trailing zeros included.
 *
 * Arithmetic never mixes truncation orders; that is a structural error,
 * not a rounding choice, so it throws std::invalid_argument.
 */
template <typename R>
class Series {
public:
    /// Coefficients in ascending order; the length fixes N = size - 1.
    static Series from_coeffs(std::vector<R> cs) {
        if (cs.empty()) {
            throw std::invalid_argument("series needs at least the x^0 term");
        }
        Series s;
        s.coeffs_ = std::move(cs);
        return s;
    }

    static Series zero(std::size_t order) {
        Series s;
        s.coeffs_.assign(order + 1, R());
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& coeff(std::size_t k) const {
        if (k >= coeffs_.size()) {
            throw std::invalid_argument("series coefficient beyond truncation");
        }
        return coeffs_[k];
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series s = a;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            s.coeffs_[i] += b.coeffs_[i];
        }
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series s = a;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            s.coeffs_[i] -= b.coeffs_[i];
        }
        return s;
    }

    /// Cauchy product, truncated back to the common order.
    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series s = zero(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return s;
    }

    /// q with q * den = num up to the truncation order; only the
    /// denominator's constant term needs to be invertible.
    friend Series operator/(const Series& num, const Series& den) {
        num.require_same_order(den);
        const R inv0 = ring_inverse(den.coeffs_[0]);
        Series q = zero(num.order());
        for (std::size_t n = 0; n < q.coeffs_.size(); ++n) {
            R acc = num.coeffs_[n];
            for (std::size_t k = 1; k <= n; ++k) {
                acc -= den.coeffs_[k] * q.coeffs_[n - k];
            }
            q.coeffs_[n] = acc * inv0;
        }
        return q;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) {
        return !(a == b);
    }

private:
    Series() = default;

    void require_same_order(const Series& o) const {
        if (coeffs_.size() != o.coeffs_.size()) {
            throw std::invalid_argument("series truncation orders differ");
        }
    }

    std::vector<R> coeffs_;
};

}  // namespace abexact
