#include <stdexcept>
#include <vector>

#include "abexact/apostol.hpp"
#include "abexact/bernoulli.hpp"
#include "test_support.hpp"

using namespace abexact;

namespace {

PoleForm pf(std::vector<Rat> num, std::size_t e) {
    return PoleForm(ZPoly::from_coeffs(std::move(num)), e);
}

const std::vector<Rat> kZs = {Rat(2), Rat(-1), Rat(1, 2), Rat(3, 5)};
const std::vector<Rat> kUs = {Rat(0), Rat(1, 3), Rat(1)};

}  // namespace

TEST_SUITE_BEGIN("apostol numbers");

TEST_CASE("low orders in closed form") {
    CHECK(apostol_number_stirling_sum(0).is_zero());
    CHECK_EQ(apostol_number_stirling_sum(1), pf({Rat(1)}, 1));
    CHECK_EQ(apostol_number_stirling_sum(1).to_string(), "1/(z-1)");
    CHECK_EQ(apostol_number_stirling_sum(2), pf({Rat(0), Rat(-2)}, 2));
    CHECK_EQ(apostol_number_stirling_sum(3),
             pf({Rat(0), Rat(3), Rat(3)}, 3));
    CHECK_EQ(apostol_number_stirling_sum(4),
             pf({Rat(0), Rat(-4), Rat(-16), Rat(-4)}, 4));
}

TEST_CASE("determinant parameter is the matrix size, index is one higher") {
    CHECK_EQ(apostol_number_determinant(0), pf({Rat(1)}, 1));
    CHECK_EQ(apostol_number_determinant(1), pf({Rat(0), Rat(-2)}, 2));
    CHECK_EQ(apostol_number_determinant(2), pf({Rat(0), Rat(3), Rat(3)}, 3));
    CHECK_EQ(apostol_number_determinant(3),
             pf({Rat(0), Rat(-4), Rat(-16), Rat(-4)}, 4));
}

TEST_CASE("row sum") {
    CHECK_EQ(apostol_number_row_sum(1), pf({Rat(1)}, 1));
    CHECK_EQ(apostol_number_row_sum(2), pf({Rat(0), Rat(-2)}, 2));
    CHECK_THROWS_AS(apostol_number_row_sum(0), std::domain_error);
    for (unsigned long n = 1; n <= 12; ++n) {
        CHECK_EQ(apostol_number_row_sum(n), apostol_number_stirling_sum(n));
        CHECK_EQ(apostol_number_determinant(n - 1),
                 apostol_number_stirling_sum(n));
    }
}

TEST_CASE("point values against the series") {
    for (const Rat& z : kZs) {
        const auto series = apostol_number_series_table_at(10, z);
        for (unsigned long n = 0; n <= 10; ++n) {
            CHECK_EQ(apostol_number_stirling_sum(n).eval(z), series[n]);
        }
    }
    // x/(2e^x - 1) has derivatives 0, 1, -4, 18, -104 at 0.
    const auto at2 = apostol_number_series_table_at(4, Rat(2));
    CHECK_EQ(at2[1], Rat(1));
    CHECK_EQ(at2[2], Rat(-4));
    CHECK_EQ(at2[3], Rat(18));
    CHECK_EQ(at2[4], Rat(-104));
}

TEST_CASE("pole orders never exceed the index") {
    for (unsigned long n = 1; n <= 12; ++n) {
        CHECK(apostol_number_stirling_sum(n).pole_order() <= n);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("apostol polynomials");

TEST_CASE("index zero and one") {
    CHECK(apostol_poly_stirling_sum(0).is_zero());
    CHECK(apostol_poly_monomial_sum(0).is_zero());
    const auto b1 = apostol_poly_stirling_sum(1);
    CHECK_EQ(b1.degree(), std::optional<std::size_t>(0));
    CHECK_EQ(b1.coeff(0), pf({Rat(1)}, 1));
    CHECK_EQ(b1.to_string(), "1/(z-1)");
    CHECK_EQ(apostol_poly_determinant(0), b1);
}

TEST_CASE("second polynomial coefficient by coefficient") {
    const auto b2 = apostol_poly_stirling_sum(2);
    CHECK_EQ(b2.degree(), std::optional<std::size_t>(1));
    CHECK_EQ(b2.coeff(0), pf({Rat(0), Rat(-2)}, 2));
    CHECK_EQ(b2.coeff(1), pf({Rat(2)}, 1));
    CHECK_EQ(b2.to_string(), "(2/(z-1))*u-2*z/(z-1)^2");
}

TEST_CASE("third polynomial coefficient by coefficient") {
    const auto b3 = apostol_poly_stirling_sum(3);
    CHECK_EQ(b3.coeff(0), pf({Rat(0), Rat(3), Rat(3)}, 3));
    CHECK_EQ(b3.coeff(1), pf({Rat(0), Rat(-6)}, 2));
    CHECK_EQ(b3.coeff(2), pf({Rat(3)}, 1));
}

TEST_CASE("all symbolic routes agree") {
    const auto series = apostol_poly_series_table(7);
    for (unsigned long n = 0; n <= 7; ++n) {
        const auto ref = series[n];
        CHECK_EQ(apostol_poly_stirling_sum(n), ref);
        CHECK_EQ(apostol_poly_monomial_sum(n), ref);
        CHECK_EQ(apostol_poly_via_bell(n), ref);
        CHECK_EQ(apostol_poly_via_quotient(n), ref);
        if (n >= 1) CHECK_EQ(apostol_poly_determinant(n - 1), ref);
    }
}

TEST_CASE("shape of the coefficient list") {
    for (unsigned long n = 1; n <= 8; ++n) {
        const auto b = apostol_poly_stirling_sum(n);
        CHECK_EQ(b.degree(), std::optional<std::size_t>(n - 1));
        // Leading u-coefficient is n/(z-1).
        CHECK_EQ(b.leading(), PoleForm(ZPoly(static_cast<long>(n)), 1));
        // Constant term is the number of the same index.
        CHECK_EQ(b.coeff(0), apostol_number_stirling_sum(n));
        for (const auto& c : b.coeffs()) {
            CHECK(c.pole_order() <= n);
        }
    }
}

TEST_CASE("evaluation at points") {
    const auto b2 = apostol_poly_stirling_sum(2);
    CHECK_EQ(apostol_poly_eval(b2, Rat(2), Rat(0)), Rat(-4));
    CHECK_EQ(apostol_poly_eval(b2, Rat(2), Rat(1)), Rat(-2));
    CHECK_THROWS_AS(apostol_poly_eval(b2, Rat(1), Rat(0)), std::domain_error);
    const auto b3 = apostol_poly_stirling_sum(3);
    CHECK_EQ(apostol_poly_eval(b3, Rat(2), Rat(0)), Rat(18));
    // B_3(u,2) = 3u^2 - 12u + 18.
    CHECK_EQ(apostol_poly_eval(b3, Rat(2), Rat(1, 2)), Rat(51, 4));
}

TEST_CASE("at negative one the Euler polynomials appear") {
    // B_n(u,-1) = -(n/2) E_{n-1}(u): E_0 = 1, E_1 = u - 1/2, E_2 = u^2 - u.
    const auto at = apostol_poly_series_table_at(3, Rat(-1));
    CHECK_EQ(at[1], UPolyRat(Rat(-1, 2)));
    CHECK_EQ(at[2], UPolyRat::from_coeffs({Rat(1, 2), Rat(-1)}));
    CHECK_EQ(at[3], UPolyRat::from_coeffs({Rat(0), Rat(3, 2), Rat(-3, 2)}));
}

TEST_CASE("series at a point matches the symbolic series") {
    const auto sym = apostol_poly_series_table(6);
    for (const Rat& z : kZs) {
        const auto at = apostol_poly_series_table_at(6, z);
        for (unsigned long n = 0; n <= 6; ++n) {
            CHECK_EQ(
                sym[n].map([&](const PoleForm& c) { return c.eval(z); }),
                at[n]);
        }
    }
    CHECK_THROWS_AS(apostol_poly_series_table_at(3, Rat(1)),
                    std::domain_error);
    CHECK_THROWS_AS(apostol_number_series_table_at(3, Rat(1)),
                    std::domain_error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("derivative pathways");

TEST_CASE("denominator derivatives in closed form") {
    const auto g = apostol_denominator_derivs(3);
    REQUIRE_EQ(g.size(), 4);
    // g(0) = z - 1.
    CHECK_EQ(g[0].coeff(0), PoleForm(z_minus_one()));
    // g'(0) = z(1-u) + u.
    const auto g1 = g[1];
    CHECK_EQ(g1.coeff(0), PoleForm(ZPoly::variable()));
    CHECK_EQ(g1.coeff(1), PoleForm(ZPoly::from_coeffs({Rat(1), Rat(-1)})));
    for (const Rat& z : kZs) {
        for (const Rat& u : kUs) {
            const auto at = apostol_denominator_derivs_at(3, z, u);
            for (unsigned long j = 0; j <= 3; ++j) {
                CHECK_EQ(apostol_poly_eval(g[j], z, u), at[j]);
                const Rat direct = z * ring_pow(Rat(1) - u, j) -
                                   ring_pow(-u, j);
                CHECK_EQ(at[j], direct);
            }
        }
    }
}

TEST_CASE("both pathways reproduce the series at points") {
    for (const Rat& z : kZs) {
        const auto at = apostol_poly_series_table_at(8, z);
        for (const Rat& u : kUs) {
            for (unsigned long n = 0; n <= 8; ++n) {
                const Rat ref = at[n].eval(u);
                CHECK_EQ(apostol_via_bell_at(n, z, u), ref);
                CHECK_EQ(apostol_via_quotient_at(n, z, u), ref);
            }
        }
    }
    CHECK_THROWS_AS(apostol_via_bell_at(2, Rat(1), Rat(0)),
                    std::domain_error);
    CHECK_THROWS_AS(apostol_via_quotient_at(2, Rat(1), Rat(0)),
                    std::domain_error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("point evaluation front end");

TEST_CASE("the four formula tags agree everywhere") {
    for (const Rat& z : kZs) {
        const auto at = apostol_number_series_table_at(6, z);
        for (unsigned long n = 0; n <= 6; ++n) {
            CHECK_EQ(apostol_eval(n, z, Rat(0), ApostolFormula::stirling),
                     at[n]);
            CHECK_EQ(apostol_eval(n, z, Rat(0), ApostolFormula::monomial),
                     at[n]);
            CHECK_EQ(apostol_eval(n, z, Rat(0), ApostolFormula::determinant),
                     at[n]);
            CHECK_EQ(apostol_eval(n, z, Rat(0), ApostolFormula::series),
                     at[n]);
        }
    }
}

TEST_CASE("fixed values") {
    CHECK_EQ(apostol_eval(2, Rat(2), Rat(0), ApostolFormula::stirling),
             Rat(-4));
    CHECK_EQ(apostol_eval(3, Rat(2), Rat(0), ApostolFormula::series), Rat(18));
    CHECK_EQ(apostol_eval(0, Rat(2), Rat(0), ApostolFormula::determinant),
             Rat(0));
    CHECK_EQ(apostol_eval(4, Rat(2), Rat(0), ApostolFormula::monomial),
             Rat(-104));
}

TEST_CASE("the pole is refused up front") {
    for (const auto tag :
         {ApostolFormula::stirling, ApostolFormula::determinant,
          ApostolFormula::monomial, ApostolFormula::series}) {
        CHECK_THROWS_AS(apostol_eval(2, Rat(1), Rat(0), tag),
                        std::domain_error);
    }
}

TEST_SUITE_END();
