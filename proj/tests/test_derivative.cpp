#include <stdexcept>
#include <vector>

#include "abexact/derivative.hpp"
#include "abexact/series.hpp"
#include "test_support.hpp"

using namespace abexact;

namespace {

// Derivatives 0..n at 0 of a function given by its Taylor coefficients.
DerivSeq<Rat> derivs_of(const std::vector<Rat>& taylor, unsigned long n) {
    DerivSeq<Rat> d;
    Int f(1);
    for (unsigned long j = 0; j <= n; ++j) {
        if (j > 0) f *= j;
        d.push_back((j < taylor.size() ? taylor[j] : Rat(0)) * Rat(f));
    }
    return d;
}

}  // namespace

TEST_SUITE_BEGIN("composite derivatives");

TEST_CASE("square of a shift") {
    // h(x) = (1 + x)^2: h(0) = 1, h'(0) = 2, h''(0) = 2, h'''(0) = 0.
    const DerivSeq<Rat> f_at_g = {Rat(1), Rat(2), Rat(2), Rat(0)};
    const DerivSeq<Rat> g = {Rat(1), Rat(1), Rat(0), Rat(0)};
    CHECK_EQ(faa_di_bruno(f_at_g, g, 0), Rat(1));
    CHECK_EQ(faa_di_bruno(f_at_g, g, 1), Rat(2));
    CHECK_EQ(faa_di_bruno(f_at_g, g, 2), Rat(2));
    CHECK_EQ(faa_di_bruno(f_at_g, g, 3), Rat(0));
}

TEST_CASE("exp of twice x") {
    // h(x) = exp(2x): h^(n)(0) = 2^n.  f = exp at g(0) = 0, g = 2x.
    const unsigned long n_max = 6;
    DerivSeq<Rat> f_at_g(n_max + 1, Rat(1));
    DerivSeq<Rat> g(n_max + 1, Rat(0));
    g[1] = Rat(2);
    for (unsigned long n = 0; n <= n_max; ++n) {
        CHECK_EQ(faa_di_bruno(f_at_g, g, n), Rat(ring_pow(Int(2), n)));
    }
}

TEST_CASE("matches direct power-series composition") {
    // f(y) = 1/(1 - y) up to order 6, g(x) = x + x^2.
    const unsigned long n_max = 6;
    std::vector<Rat> h_taylor;
    {
        // Composite series (sum over k of g^k) truncated at order 6.
        auto acc = Series<Rat>::zero(n_max);
        std::vector<Rat> gc(n_max + 1, Rat(0));
        gc[1] = Rat(1);
        gc[2] = Rat(1);
        const auto gs = Series<Rat>::from_coeffs(gc);
        auto power = Series<Rat>::zero(n_max);
        {
            std::vector<Rat> one(n_max + 1, Rat(0));
            one[0] = Rat(1);
            power = Series<Rat>::from_coeffs(one);
        }
        for (unsigned long k = 0; k <= n_max; ++k) {
            acc = acc + power;
            power = power * gs;
        }
        for (unsigned long j = 0; j <= n_max; ++j) h_taylor.push_back(acc.coeff(j));
    }
    // f^(k)(g(0)) = f^(k)(0) = k!.
    DerivSeq<Rat> f_at_g;
    DerivSeq<Rat> g(n_max + 1, Rat(0));
    g[1] = Rat(1);
    g[2] = Rat(2);
    Int f(1);
    for (unsigned long k = 0; k <= n_max; ++k) {
        if (k > 0) f *= k;
        f_at_g.push_back(Rat(f));
    }
    for (unsigned long n = 0; n <= n_max; ++n) {
        Int nf = factorial(n);
        CHECK_EQ(faa_di_bruno(f_at_g, g, n), h_taylor[n] * Rat(nf));
    }
}

TEST_CASE("length checks") {
    const DerivSeq<Rat> two = {Rat(1), Rat(1)};
    CHECK_THROWS_AS(faa_di_bruno(two, two, 2), std::invalid_argument);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("quotient derivatives");

TEST_CASE("first derivative of a reciprocal") {
    // d/dx [1/(1+2x)] at 0 is -2.
    const DerivSeq<Rat> mu = {Rat(1), Rat(0)};
    const DerivSeq<Rat> nu = {Rat(1), Rat(2)};
    CHECK_EQ(quotient_derivative(mu, nu, 0), Rat(1));
    CHECK_EQ(quotient_derivative(mu, nu, 1), Rat(-2));
}

TEST_CASE("x over 2 exp x minus 1") {
    // x/(2e^x - 1) = x - 2x^2 + 3x^3 - (13/3)x^4 + ...
    const unsigned long n_max = 4;
    DerivSeq<Rat> mu(n_max + 1, Rat(0));
    mu[1] = Rat(1);
    DerivSeq<Rat> nu(n_max + 1, Rat(2));
    nu[0] = Rat(1);
    const Rat expected[] = {Rat(0), Rat(1), Rat(-4), Rat(18), Rat(-104)};
    for (unsigned long n = 0; n <= n_max; ++n) {
        CHECK_EQ(quotient_derivative(mu, nu, n), expected[n]);
    }
}

TEST_CASE("agrees with series division") {
    const std::vector<Rat> mu_taylor = {Rat(1), Rat(3), Rat(-2), Rat(1, 2),
                                        Rat(0), Rat(5)};
    const std::vector<Rat> nu_taylor = {Rat(2), Rat(-1), Rat(1, 3), Rat(4),
                                        Rat(1), Rat(-7)};
    const unsigned long n_max = 5;
    const auto q = Series<Rat>::from_coeffs(mu_taylor) /
                   Series<Rat>::from_coeffs(nu_taylor);
    const auto mu = derivs_of(mu_taylor, n_max);
    const auto nu = derivs_of(nu_taylor, n_max);
    for (unsigned long n = 0; n <= n_max; ++n) {
        CHECK_EQ(quotient_derivative(mu, nu, n), q.coeff(n) * Rat(factorial(n)));
    }
}

TEST_CASE("denominator must have a unit value") {
    const DerivSeq<Rat> mu = {Rat(1), Rat(0)};
    const DerivSeq<Rat> nu = {Rat(0), Rat(1)};
    CHECK_THROWS_AS(quotient_derivative(mu, nu, 1), std::domain_error);
    CHECK_THROWS_AS(quotient_derivative(mu, {Rat(1)}, 1),
                    std::invalid_argument);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("derivative building blocks");

TEST_CASE("multiplying by x shifts and scales derivatives") {
    const DerivSeq<Rat> f = {Rat(5), Rat(-1), Rat(7)};
    CHECK_EQ(leibniz_x_times(f, 0), Rat(0));
    CHECK_EQ(leibniz_x_times(f, 1), Rat(5));
    CHECK_EQ(leibniz_x_times(f, 2), Rat(-2));
    CHECK_EQ(leibniz_x_times(f, 3), Rat(21));
    CHECK_THROWS_AS(leibniz_x_times(f, 4), std::invalid_argument);
}

TEST_CASE("reciprocal derivative ladder") {
    const auto d = reciprocal_derivs(Rat(2), 3);
    REQUIRE_EQ(d.size(), 4);
    CHECK_EQ(d[0], Rat(1, 2));
    CHECK_EQ(d[1], Rat(-1, 4));
    CHECK_EQ(d[2], Rat(1, 4));
    CHECK_EQ(d[3], Rat(-3, 8));
    CHECK_THROWS_AS(reciprocal_derivs(Rat(0), 2), std::domain_error);
    // Same ladder through the quotient determinant.
    DerivSeq<Rat> mu(4, Rat(0));
    mu[0] = Rat(1);
    const DerivSeq<Rat> nu = {Rat(2), Rat(1), Rat(0), Rat(0)};
    // 1/(2 + x): the n-th derivative at 0 is the ladder entry.
    for (unsigned long n = 0; n <= 3; ++n) {
        CHECK_EQ(quotient_derivative(mu, nu, n), d[n]);
    }
}

TEST_SUITE_END();
