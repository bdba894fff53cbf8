#include <optional>
#include <stdexcept>
#include <vector>

#include "abexact/matrix.hpp"
#include "abexact/ring.hpp"
#include "abexact/series.hpp"
#include "test_support.hpp"

using namespace abexact;

TEST_SUITE_BEGIN("rationals");

TEST_CASE("construction canonicalizes") {
    CHECK_EQ(Rat(3, 6), Rat(1, 2));
    CHECK_EQ(Rat(-5, 10), Rat(-1, 2));
    CHECK_EQ(Rat(5, -10), Rat(-1, 2));
    CHECK_EQ(Rat(0, 7), Rat(0));
    CHECK_EQ(Rat(3, 6).to_string(), "1/2");
    CHECK_EQ(Rat(4, 2).to_string(), "2");
    CHECK_EQ(Rat(-7).to_string(), "-7");
}

TEST_CASE("zero denominators are rejected before any gmp call") {
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(Int(0), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("parse accepts p and p/q and nothing else") {
    CHECK_EQ(Rat::parse("7"), Rat(7));
    CHECK_EQ(Rat::parse("-7"), Rat(-7));
    CHECK_EQ(Rat::parse("3/6"), Rat(1, 2));
    CHECK_EQ(Rat::parse("-5/10"), Rat(-1, 2));
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(" 1"), std::invalid_argument);
}

TEST_CASE("parse round trips to_string") {
    for (long p = -9; p <= 9; ++p) {
        for (long q = 1; q <= 9; ++q) {
            const Rat x(p, q);
            CHECK_EQ(Rat::parse(x.to_string()), x);
        }
    }
}

TEST_CASE("field operations") {
    const Rat a(2, 3);
    const Rat b(-1, 6);
    CHECK_EQ(a + b, Rat(1, 2));
    CHECK_EQ(a - b, Rat(5, 6));
    CHECK_EQ(a * b, Rat(-1, 9));
    CHECK_EQ(exact_div(a, b), Rat(-4));
    CHECK_EQ(ring_inverse(b), Rat(-6));
    CHECK_EQ(-a, Rat(-2, 3));
    CHECK_THROWS_AS(exact_div(a, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(ring_inverse(Rat(0)), std::domain_error);
    CHECK_EQ(Rat(1, 2).sign(), 1);
    CHECK_EQ(Rat(-1, 2).sign(), -1);
    CHECK_EQ(Rat(0).sign(), 0);
    CHECK(Rat(1).is_one());
    CHECK(Rat(0).is_zero());
}

TEST_CASE("ring_pow and from_rat") {
    CHECK_EQ(ring_pow(Rat(2, 3), 3), Rat(8, 27));
    CHECK_EQ(ring_pow(Rat(0), 0), Rat(1));
    CHECK_EQ(from_rat<Rat>(Rat(1, 2)), Rat(1, 2));
    CHECK_EQ(from_rat<ZPoly>(Rat(1, 2)), ZPoly(Rat(1, 2)));
    CHECK_EQ(from_rat<PoleForm>(Rat(1, 2)), PoleForm(Rat(1, 2)));
    CHECK_EQ(from_rat<UZPoly>(Rat(3)), UZPoly(ZPoly(3)));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("polynomials");

TEST_CASE("canonical zero and degrees") {
    const UPolyRat zero;
    CHECK(zero.is_zero());
    CHECK_EQ(zero.degree(), std::nullopt);
    CHECK_EQ(UPolyRat::from_coeffs({Rat(0), Rat(0)}).degree(), std::nullopt);
    CHECK_EQ(UPolyRat::from_coeffs({Rat(1), Rat(2), Rat(0)}).degree(),
             std::optional<std::size_t>(1));
    CHECK_THROWS_AS(zero.leading(), std::domain_error);
    CHECK_EQ(zero.coeff(5), Rat(0));
}

TEST_CASE("arithmetic") {
    const auto p = UPolyRat::from_coeffs({Rat(1), Rat(2)});
    const auto q = UPolyRat::from_coeffs({Rat(-1), Rat(2)});
    CHECK_EQ(p * q, UPolyRat::from_coeffs({Rat(-1), Rat(0), Rat(4)}));
    CHECK_EQ(p + q, UPolyRat::from_coeffs({Rat(0), Rat(4)}));
    CHECK_EQ(p - p, UPolyRat());
    CHECK_EQ(p.eval(Rat(3)), Rat(7));
    CHECK_EQ((p * q).eval(Rat(3)), Rat(35));
    CHECK_EQ(p.derivative(), UPolyRat(Rat(2)));
    CHECK_EQ(p.times_monomial(2),
             UPolyRat::from_coeffs({Rat(0), Rat(0), Rat(1), Rat(2)}));
}

TEST_CASE("exact division") {
    const auto p = UPolyRat::from_coeffs({Rat(1), Rat(2), Rat(1)});
    const auto f = UPolyRat::from_coeffs({Rat(1), Rat(1)});
    CHECK_EQ(exact_div(p, f), f);
    CHECK_THROWS_AS(exact_div(f, p), std::domain_error);
    CHECK_THROWS_AS(
        exact_div(UPolyRat::from_coeffs({Rat(1), Rat(1), Rat(1)}), f),
        std::domain_error);
    CHECK_THROWS_AS(exact_div(p, UPolyRat()), std::domain_error);
    CHECK_EQ(ring_inverse(UPolyRat(Rat(2))), UPolyRat(Rat(1, 2)));
    CHECK_THROWS_AS(ring_inverse(f), std::domain_error);
}

TEST_CASE("printing") {
    CHECK_EQ(UPolyRat().to_string(), "0");
    CHECK_EQ(UPolyRat::from_coeffs({Rat(1, 6), Rat(-1), Rat(1)}).to_string(),
             "u^2-u+1/6");
    CHECK_EQ(UPolyRat::from_coeffs({Rat(0), Rat(1, 2)}).to_string(),
             "(1/2)*u");
    CHECK_EQ(UPolyRat::from_coeffs({Rat(-1, 2), Rat(1)}).to_string(),
             "u-1/2");
    CHECK_EQ(ZPoly::from_coeffs({Rat(0), Rat(-2)}).to_string(), "-2*z");
    CHECK_EQ(UPolyRat::from_coeffs({Rat(3), Rat(-1)}).to_string(), "-u+3");
    CHECK_EQ(ZPoly::monomial(Rat(5), 3).to_string(), "5*z^3");
}

TEST_CASE("map and nested evaluation") {
    const auto p = UPolyRat::from_coeffs({Rat(1), Rat(2), Rat(3)});
    const auto doubled = p.map([](const Rat& c) { return c * Rat(2); });
    CHECK_EQ(doubled, UPolyRat::from_coeffs({Rat(2), Rat(4), Rat(6)}));
    // Composition through eval over the polynomial ring itself.
    const auto shift = UPolyRat::from_coeffs({Rat(1), Rat(1)});
    const auto q = UPolyRat::from_coeffs({Rat(0), Rat(0), Rat(1)});
    CHECK_EQ(q.eval(shift), UPolyRat::from_coeffs({Rat(1), Rat(2), Rat(1)}));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("pole forms");

TEST_CASE("normalization cancels z-1 factors") {
    CHECK_EQ(PoleForm(z_minus_one(), 1), PoleForm(1L));
    CHECK_EQ(PoleForm(z_minus_one(), 1).pole_order(), 0);
    const auto z2m1 = ZPoly::from_coeffs({Rat(-1), Rat(0), Rat(1)});
    CHECK_EQ(PoleForm(z2m1, 1), PoleForm(ZPoly::from_coeffs({Rat(1), Rat(1)})));
    const PoleForm z_over_sq(ZPoly::variable(), 2);
    CHECK_EQ(z_over_sq.num(), ZPoly::variable());
    CHECK_EQ(z_over_sq.pole_order(), 2);
    CHECK_EQ(PoleForm(ZPoly(), 5), PoleForm());
    CHECK_EQ(PoleForm().pole_order(), 0);
}

TEST_CASE("units and inverses") {
    CHECK_THROWS_AS(ring_inverse(PoleForm(ZPoly::variable())),
                    std::domain_error);
    CHECK_THROWS_AS(ring_inverse(PoleForm()), std::domain_error);
    const PoleForm two_over(ZPoly(2), 1);
    CHECK_EQ(ring_inverse(two_over),
             PoleForm(ZPoly::from_coeffs({Rat(-1, 2), Rat(1, 2)})));
    CHECK_EQ(ring_inverse(two_over) * two_over, PoleForm(1L));
    // (z-1)^2 scaled: unit with negative pole order becomes a numerator power.
    const PoleForm sq(z_minus_one() * z_minus_one() * ZPoly(3), 0);
    CHECK_EQ(ring_inverse(sq) * sq, PoleForm(1L));
    CHECK_EQ(exact_div(PoleForm(ZPoly::variable() * z_minus_one(), 0),
                       PoleForm(z_minus_one(), 0)),
             PoleForm(ZPoly::variable()));
    CHECK_THROWS_AS(exact_div(PoleForm(ZPoly::variable()),
                              PoleForm(ZPoly::from_coeffs({Rat(1), Rat(1)}))),
                    std::domain_error);
}

TEST_CASE("arithmetic keeps the representation normalized") {
    const PoleForm a(ZPoly(1), 1);
    const PoleForm b(ZPoly(-1), 1);
    CHECK((a + b).is_zero());
    CHECK_EQ((a + b).pole_order(), 0);
    const PoleForm c = a * PoleForm(z_minus_one());
    CHECK_EQ(c, PoleForm(1L));
    // 1/(z-1) + 1 = z/(z-1).
    CHECK_EQ(a + PoleForm(1L), PoleForm(ZPoly::variable(), 1));
}

TEST_CASE("evaluation away from the pole") {
    const PoleForm b2(ZPoly::from_coeffs({Rat(0), Rat(-2)}), 2);
    CHECK_EQ(b2.eval(Rat(2)), Rat(-4));
    CHECK_EQ(b2.eval(Rat(-1)), Rat(1, 2));
    CHECK_THROWS_AS(b2.eval(Rat(1)), std::domain_error);
    CHECK_EQ(PoleForm(ZPoly::variable()).eval(Rat(1)), Rat(1));
}

TEST_CASE("printing") {
    CHECK_EQ(PoleForm().to_string(), "0");
    CHECK_EQ(PoleForm(ZPoly(1), 1).to_string(), "1/(z-1)");
    CHECK_EQ(PoleForm(ZPoly::from_coeffs({Rat(0), Rat(-2)}), 2).to_string(),
             "-2*z/(z-1)^2");
    CHECK_EQ(PoleForm(ZPoly::from_coeffs({Rat(1), Rat(1)}), 1).to_string(),
             "(z+1)/(z-1)");
    CHECK_EQ(PoleForm(ZPoly(5)).to_string(), "5");
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("series");

TEST_CASE("construction") {
    CHECK_THROWS_AS(Series<Rat>::from_coeffs({}), std::invalid_argument);
    const auto s = Series<Rat>::zero(4);
    CHECK_EQ(s.order(), 4);
    CHECK_EQ(s.coeff(4), Rat(0));
    CHECK_THROWS_AS(s.coeff(5), std::invalid_argument);
}

TEST_CASE("orders never mix") {
    const auto a = Series<Rat>::zero(3);
    const auto b = Series<Rat>::zero(4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a / b, std::invalid_argument);
}

TEST_CASE("geometric series") {
    const auto one = Series<Rat>::from_coeffs({Rat(1), Rat(0), Rat(0), Rat(0),
                                               Rat(0)});
    const auto den = Series<Rat>::from_coeffs({Rat(1), Rat(-1), Rat(0), Rat(0),
                                               Rat(0)});
    CHECK_EQ(one / den, Series<Rat>::from_coeffs(
                            {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("exponential series multiply to one") {
    std::vector<Rat> pos(7);
    std::vector<Rat> neg(7);
    Int f(1);
    for (std::size_t j = 0; j < 7; ++j) {
        if (j > 0) f *= static_cast<unsigned long>(j);
        pos[j] = Rat(Int(1), f);
        neg[j] = (j % 2 == 0) ? pos[j] : -pos[j];
    }
    std::vector<Rat> one(7);
    one[0] = Rat(1);
    CHECK_EQ(Series<Rat>::from_coeffs(pos) * Series<Rat>::from_coeffs(neg),
             Series<Rat>::from_coeffs(one));
}

TEST_CASE("division only needs an invertible constant term") {
    const auto num = Series<Rat>::from_coeffs({Rat(1), Rat(2), Rat(3)});
    const auto den = Series<Rat>::from_coeffs({Rat(2), Rat(100), Rat(-7)});
    CHECK_EQ((num / den) * den, num);
    const auto bad = Series<Rat>::from_coeffs({Rat(0), Rat(1), Rat(0)});
    CHECK_THROWS_AS(num / bad, std::domain_error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("determinants");

TEST_CASE("small integer anchors") {
    const auto m = SquareMatrix<Rat>::from_rows(
        {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    CHECK_EQ(determinant_cofactor(m), Rat(-2));
    CHECK_EQ(determinant_bareiss(m), Rat(-2));
    CHECK_EQ(determinant(m), Rat(-2));
    CHECK_EQ(determinant(SquareMatrix<Rat>(0)), Rat(1));
    const auto one = SquareMatrix<Rat>::from_rows({{Rat(7)}});
    CHECK_EQ(determinant(one), Rat(7));
}

TEST_CASE("zero pivots trigger row swaps with a sign flip") {
    const auto m = SquareMatrix<Rat>::from_rows(
        {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    CHECK_EQ(determinant_bareiss(m), Rat(-1));
    const auto singular = SquareMatrix<Rat>::from_rows(
        {{Rat(0), Rat(1)}, {Rat(0), Rat(2)}});
    CHECK_EQ(determinant_bareiss(singular), Rat(0));
}

TEST_CASE("elimination matches cofactor expansion on a 5x5") {
    SquareMatrix<Rat> m(5);
    long v = 1;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            m.at(i, j) = Rat((v * v) % 11 - 5);
            ++v;
        }
    }
    CHECK_EQ(determinant_bareiss(m), determinant_cofactor(m));
}

TEST_CASE("polynomial entries stay exact") {
    const auto z = ZPoly::variable();
    const auto m = SquareMatrix<ZPoly>::from_rows(
        {{z, z_minus_one()}, {z, z * Rat(2)}});
    const auto det = determinant(m);
    CHECK_EQ(det, ZPoly::from_coeffs({Rat(0), Rat(1), Rat(1)}));
    CHECK_EQ(determinant_bareiss(m), determinant_cofactor(m));
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(
        SquareMatrix<Rat>::from_rows({{Rat(1), Rat(2)}, {Rat(3)}}),
        std::invalid_argument);
}

TEST_SUITE_END();
