#include "abexact/verify.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abexact/apostol.hpp"
#include "abexact/bernoulli.hpp"
#include "abexact/combinatorics.hpp"
#include "abexact/derivative.hpp"
#include "abexact/matrix.hpp"
#include "abexact/pole_form.hpp"
#include "abexact/poly.hpp"
#include "abexact/rat.hpp"
#include "abexact/ring.hpp"
#include "abexact/series.hpp"

namespace abexact {
namespace {

std::string str(const Rat& x) { return x.to_string(); }
std::string str(const Int& x) { return x.get_str(); }
std::string str(const PoleForm& x) { return x.to_string(); }
template <typename R, typename V>
std::string str(const Poly<R, V>& p) {
    return p.to_string();
}
template <typename R>
std::string str(const Series<R>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        if (i > 0) out += ", ";
        out += str(s.coeffs()[i]);
    }
    return out + "]";
}

/// Per-suite accumulator; only the first counterexample is rendered, so
/// passing cases never pay for string formatting.
struct Suite {
    CheckResult result;

    explicit Suite(std::string name) { result.name = std::move(name); }

    template <typename T, typename Ctx>
    void expect_eq(const T& a, const T& b, Ctx&& context) {
        ++result.cases;
        if (result.passed && !(a == b)) {
            result.passed = false;
            result.detail = context() + ": " + str(a) + " vs " + str(b);
        }
    }

    template <typename Ctx>
    void expect(bool ok, Ctx&& context) {
        ++result.cases;
        if (result.passed && !ok) {
            result.passed = false;
            result.detail = context();
        }
    }
};

class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat rational() { return Rat(integer(-9, 9), integer(1, 9)); }

    Rat nonzero_rational() {
        Rat q = rational();
        while (q.is_zero()) q = rational();
        return q;
    }

    /// A rational avoiding the pole of the Apostol parameter.
    Rat rational_not_one() {
        Rat q = rational();
        while (q == Rat(1)) q = rational();
        return q;
    }

    std::vector<Rat> rationals(std::size_t len) {
        std::vector<Rat> v;
        v.reserve(len);
        for (std::size_t i = 0; i < len; ++i) v.push_back(rational());
        return v;
    }

    ZPoly zpoly(std::size_t max_deg) {
        return ZPoly::from_coeffs(rationals(max_deg + 1));
    }

    UPolyRat upoly(std::size_t max_deg) {
        return UPolyRat::from_coeffs(rationals(max_deg + 1));
    }

private:
    std::mt19937_64 eng_;
};

std::string at_n(const char* what, unsigned long n) {
    return std::string(what) + " at n=" + std::to_string(n);
}

std::string at_nk(const char* what, unsigned long n, unsigned long k) {
    return std::string(what) + " at n=" + std::to_string(n) +
           ", k=" + std::to_string(k);
}

void check_exact_arithmetic(Suite& s, const VerifyOptions& opt) {
    Rng rng(opt.seed);
    for (std::size_t it = 0; it < opt.random_cases; ++it) {
        const auto ctx = [&](const char* what) {
            return [what, it] {
                return std::string(what) + " (case " + std::to_string(it) + ")";
            };
        };

        const Rat a = rng.rational();
        const Rat b = rng.rational();
        const Rat c = rng.rational();
        s.expect_eq((a + b) + c, a + (b + c), ctx("rational associativity"));
        s.expect_eq(a * (b + c), a * b + a * c, ctx("rational distributivity"));
        s.expect_eq(Rat::parse(a.to_string()), a, ctx("rational parse round trip"));
        const Rat nz = rng.nonzero_rational();
        s.expect_eq(nz * ring_inverse(nz), Rat(1), ctx("rational inverse"));
        s.expect_eq(exact_div(a * nz, nz), a, ctx("rational exact division"));

        const ZPoly p = rng.zpoly(4);
        const ZPoly q = rng.zpoly(4);
        const Rat x = rng.rational();
        s.expect_eq((p * q).eval(x), p.eval(x) * q.eval(x),
                    ctx("polynomial product evaluation"));
        if (!q.is_zero()) {
            s.expect_eq(exact_div(p * q, q), p, ctx("polynomial exact division"));
        }

        const std::size_t e = static_cast<std::size_t>(rng.integer(0, 3));
        const ZPoly num = rng.zpoly(3);
        const PoleForm f(num, e);
        s.expect(f.pole_order() == 0 || !(f.num().eval(Rat(1)) == Rat(0)),
                 ctx("pole form core keeps no root at z=1"));
        s.expect_eq(f, PoleForm(num * z_minus_one(), e + 1),
                    ctx("pole form cancellation"));

        const PoleForm g(rng.zpoly(3), static_cast<std::size_t>(rng.integer(0, 3)));
        s.expect_eq((f + g) - g, f, ctx("pole form additive cancellation"));
        s.expect_eq(f * g, g * f, ctx("pole form commutativity"));
        const Rat z = rng.rational_not_one();
        s.expect_eq((f + g).eval(z), f.eval(z) + g.eval(z),
                    ctx("pole form evaluation is additive"));
        s.expect_eq((f * g).eval(z), f.eval(z) * g.eval(z),
                    ctx("pole form evaluation is multiplicative"));

        std::vector<Rat> num_cs = rng.rationals(7);
        std::vector<Rat> den_cs = rng.rationals(7);
        den_cs[0] = rng.nonzero_rational();
        const auto num_s = Series<Rat>::from_coeffs(num_cs);
        const auto den_s = Series<Rat>::from_coeffs(den_cs);
        s.expect_eq((num_s / den_s) * den_s, num_s,
                    ctx("series division round trip"));

        SquareMatrix<Rat> m(4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = rng.rational();
        }
        const Rat db = determinant_bareiss(m);
        s.expect_eq(db, determinant_cofactor(m),
                    ctx("determinant elimination vs cofactor"));
        SquareMatrix<Rat> swapped = m;
        for (std::size_t j = 0; j < 4; ++j) {
            std::swap(swapped.at(0, j), swapped.at(1, j));
        }
        s.expect_eq(determinant_bareiss(swapped), -db,
                    ctx("determinant row swap flips sign"));

        SquareMatrix<ZPoly> pm(3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) pm.at(i, j) = rng.zpoly(1);
        }
        s.expect_eq(determinant_bareiss(pm), determinant_cofactor(pm),
                    ctx("polynomial determinant elimination vs cofactor"));
    }

    const auto geo = Series<Rat>::from_coeffs({Rat(1), Rat(0), Rat(0), Rat(0)}) /
                     Series<Rat>::from_coeffs({Rat(1), Rat(-1), Rat(0), Rat(0)});
    s.expect_eq(geo, Series<Rat>::from_coeffs({Rat(1), Rat(1), Rat(1), Rat(1)}),
                [] { return std::string("geometric series expansion"); });
}

void check_stirling_consistency(Suite& s) {
    const unsigned long n_max = 30;
    const StirlingTable table(n_max);
    for (unsigned long n = 0; n <= n_max; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            s.expect_eq(stirling2_sum(n, k), table.at(n, k),
                        [&] { return at_nk("sum formula vs recurrence", n, k); });
        }
    }
}

void check_stirling_column_series(Suite& s) {
    const std::size_t order = 30;
    std::vector<Rat> em1(order + 1);
    for (std::size_t j = 1; j <= order; ++j) em1[j] = Rat(Int(1), factorial(j));
    const auto base = Series<Rat>::from_coeffs(em1);

    std::vector<Rat> one(order + 1);
    one[0] = Rat(1);
    auto power = Series<Rat>::from_coeffs(one);
    for (unsigned long k = 0; k <= 6; ++k) {
        for (unsigned long n = 0; n <= order; ++n) {
            s.expect_eq(power.coeff(n),
                        Rat(stirling2_sum(n, k) * factorial(k), factorial(n)),
                        [&] { return at_nk("column generating function", n, k); });
        }
        power = power * base;
    }
}

void check_bell_addition(Suite& s, const VerifyOptions& opt) {
    Rng rng(opt.seed + 1);
    for (std::size_t it = 0; it < opt.random_cases; ++it) {
        const auto n = static_cast<unsigned long>(rng.integer(0, 8));
        const auto k = static_cast<unsigned long>(rng.integer(0, static_cast<long>(n)));
        const std::size_t len = n - k + 1;
        const std::vector<Rat> x = rng.rationals(len);
        const std::vector<Rat> y = rng.rationals(len);
        std::vector<Rat> xy(len);
        for (std::size_t i = 0; i < len; ++i) xy[i] = x[i] + y[i];

        const Rat lhs = bell_partial<Rat>(n, k, std::span<const Rat>(xy));
        Rat rhs;
        for (unsigned long l = 0; l <= n; ++l) {
            const unsigned long m = n - l;
            for (unsigned long r = 0; r <= k; ++r) {
                const unsigned long sc = k - r;
                if (r > l || sc > m) continue;
                const Rat left = bell_partial<Rat>(
                    l, r, std::span<const Rat>(x.data(), l - r + 1));
                if (left.is_zero()) continue;
                const Rat right = bell_partial<Rat>(
                    m, sc, std::span<const Rat>(y.data(), m - sc + 1));
                rhs += Rat(binomial(static_cast<long>(n), static_cast<long>(l))) *
                       left * right;
            }
        }
        s.expect_eq(lhs, rhs, [&] { return at_nk("argument addition", n, k); });
    }
}

void check_bell_scaling(Suite& s, const VerifyOptions& opt) {
    Rng rng(opt.seed + 2);
    for (std::size_t it = 0; it < opt.random_cases; ++it) {
        const auto n = static_cast<unsigned long>(rng.integer(0, 8));
        const auto k = static_cast<unsigned long>(rng.integer(0, static_cast<long>(n)));
        const std::size_t len = n - k + 1;
        const std::vector<Rat> x = rng.rationals(len);
        const Rat a = rng.rational();
        const Rat b = rng.rational();

        std::vector<Rat> scaled(len);
        Rat bpow = b;
        for (std::size_t i = 0; i < len; ++i) {
            scaled[i] = a * bpow * x[i];
            bpow *= b;
        }
        const Rat lhs = bell_partial<Rat>(n, k, std::span<const Rat>(scaled));
        const Rat rhs = ring_pow(a, k) * ring_pow(b, n) *
                        bell_partial<Rat>(n, k, std::span<const Rat>(x));
        s.expect_eq(lhs, rhs, [&] { return at_nk("argument scaling", n, k); });
    }
}

void check_bell_all_ones(Suite& s) {
    for (unsigned long n = 0; n <= 19; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            const std::vector<Rat> ones(n - k + 1, Rat(1));
            s.expect_eq(bell_partial<Rat>(n, k, std::span<const Rat>(ones)),
                        Rat(stirling2_sum(n, k)),
                        [&] { return at_nk("all-ones collapse", n, k); });
        }
    }
}

void check_derivative_calculus(Suite& s, const VerifyOptions& opt) {
    Rng rng(opt.seed + 3);
    const unsigned long n_top = 6;
    for (std::size_t it = 0; it < opt.random_cases; ++it) {
        const auto ctx = [&](const char* what, unsigned long n) {
            return [what, n, it] {
                return at_n(what, n) + " (case " + std::to_string(it) + ")";
            };
        };

        // Composite derivatives against direct polynomial composition.
        const UPolyRat f = rng.upoly(3);
        const UPolyRat g = rng.upoly(3);
        const UPolyRat h = f.eval(g);
        const Rat g0 = g.coeff(0);
        DerivSeq<Rat> f_at_g;
        UPolyRat fk = f;
        for (unsigned long k = 0; k <= n_top; ++k) {
            f_at_g.push_back(fk.eval(g0));
            fk = fk.derivative();
        }
        DerivSeq<Rat> g_derivs;
        for (unsigned long j = 0; j <= n_top; ++j) {
            g_derivs.push_back(Rat(factorial(j)) * g.coeff(j));
        }
        for (unsigned long n = 0; n <= n_top; ++n) {
            s.expect_eq(faa_di_bruno(f_at_g, g_derivs, n),
                        Rat(factorial(n)) * h.coeff(n),
                        ctx("composite derivative vs composition", n));
        }

        // Quotient derivatives against truncated series division.
        std::vector<Rat> mu_cs = rng.rationals(n_top + 1);
        std::vector<Rat> nu_cs = rng.rationals(n_top + 1);
        nu_cs[0] = rng.nonzero_rational();
        const auto quot =
            Series<Rat>::from_coeffs(mu_cs) / Series<Rat>::from_coeffs(nu_cs);
        DerivSeq<Rat> mu_derivs;
        DerivSeq<Rat> nu_derivs;
        for (unsigned long j = 0; j <= n_top; ++j) {
            mu_derivs.push_back(Rat(factorial(j)) * mu_cs[j]);
            nu_derivs.push_back(Rat(factorial(j)) * nu_cs[j]);
        }
        for (unsigned long n = 0; n <= n_top; ++n) {
            s.expect_eq(quotient_derivative(mu_derivs, nu_derivs, n),
                        Rat(factorial(n)) * quot.coeff(n),
                        ctx("quotient derivative vs series division", n));
        }

        // Reciprocal derivatives are the mu = 1 quotient column.
        const Rat y0 = rng.nonzero_rational();
        const DerivSeq<Rat> rec = reciprocal_derivs(y0, n_top);
        DerivSeq<Rat> one_derivs(n_top + 1);
        one_derivs[0] = Rat(1);
        DerivSeq<Rat> shift_derivs(n_top + 1);
        shift_derivs[0] = y0;
        shift_derivs[1] = Rat(1);
        for (unsigned long n = 0; n <= n_top; ++n) {
            s.expect_eq(rec[n], quotient_derivative(one_derivs, shift_derivs, n),
                        ctx("reciprocal vs quotient derivative", n));
        }

        // Multiplying by the series variable, checked on a polynomial.
        const UPolyRat pp = rng.upoly(4);
        const UPolyRat xp = pp.times_monomial(1);
        DerivSeq<Rat> p_derivs;
        for (unsigned long j = 0; j <= 5; ++j) {
            p_derivs.push_back(Rat(factorial(j)) * pp.coeff(j));
        }
        for (unsigned long n = 0; n <= 5; ++n) {
            s.expect_eq(leibniz_x_times(p_derivs, n),
                        Rat(factorial(n)) * xp.coeff(n),
                        ctx("variable multiple derivative", n));
        }
    }
}

void check_classical_numbers(Suite& s, const VerifyOptions& opt) {
    const unsigned long n_max = opt.number_n_max;
    const std::vector<Rat> rec = bernoulli_recurrence_table(n_max);
    const std::vector<Rat> ser = bernoulli_number_series_table(n_max);
    s.expect_eq(rec[0], Rat(1), [] { return std::string("value at n=0"); });
    for (unsigned long n = 0; n <= n_max; ++n) {
        s.expect_eq(ser[n], rec[n],
                    [&] { return at_n("series vs recurrence", n); });
    }
    for (unsigned long n = 1; n <= n_max; ++n) {
        s.expect_eq(bernoulli_number_stirling_sum(n), rec[n],
                    [&] { return at_n("alternating sum vs recurrence", n); });
        s.expect_eq(bernoulli_number_determinant(n), rec[n],
                    [&] { return at_n("determinant vs recurrence", n); });
        if (n <= kCompositionSumMaxN) {
            s.expect_eq(bernoulli_number_composition_sum(n), rec[n],
                        [&] { return at_n("composition sum vs recurrence", n); });
        }
        if (n >= 3 && n % 2 == 1) {
            s.expect(rec[n].is_zero(),
                     [&] { return at_n("odd index vanishing", n); });
        }
    }
}

void check_classical_polynomials(Suite& s, const VerifyOptions& opt) {
    const unsigned long n_max = opt.poly_n_max;
    const std::vector<UPolyRat> ser = bernoulli_poly_series_table(n_max);
    const std::vector<Rat> rec = bernoulli_recurrence_table(n_max);
    const UPolyRat shifted = UPolyRat::from_coeffs({Rat(1), Rat(1)});
    for (unsigned long n = 0; n <= n_max; ++n) {
        s.expect(ser[n].degree() == std::optional<std::size_t>(n),
                 [&] { return at_n("degree", n); });
        s.expect_eq(ser[n].coeff(n), Rat(1),
                    [&] { return at_n("monic leading coefficient", n); });
        s.expect_eq(ser[n].coeff(0), rec[n],
                    [&] { return at_n("constant term is the number", n); });
        if (n >= 1) {
            s.expect_eq(ser[n].derivative(),
                        Rat(static_cast<long>(n)) * ser[n - 1],
                        [&] { return at_n("derivative ladder", n); });
            s.expect_eq(ser[n].eval(shifted) - ser[n],
                        UPolyRat::monomial(Rat(static_cast<long>(n)), n - 1),
                        [&] { return at_n("forward difference", n); });
            s.expect_eq(bernoulli_poly_stirling_sum(n), ser[n],
                        [&] { return at_n("double sum vs series", n); });
            s.expect_eq(bernoulli_poly_determinant(n), ser[n],
                        [&] { return at_n("determinant vs series", n); });
        }
    }
}

void check_apostol_numbers(Suite& s, const VerifyOptions& opt) {
    const unsigned long n_max = opt.number_n_max;
    // Independent reference: divide x by (z*e^x - 1) as a truncated series
    // over pole forms, one guard term past n_max.
    std::vector<PoleForm> num(n_max + 2);
    std::vector<PoleForm> den(n_max + 2);
    num[1] = PoleForm(1L);
    den[0] = PoleForm(z_minus_one());
    for (std::size_t j = 1; j < den.size(); ++j) {
        den[j] = PoleForm(ZPoly::monomial(Rat(Int(1), factorial(j)), 1));
    }
    const auto quot = Series<PoleForm>::from_coeffs(num) /
                      Series<PoleForm>::from_coeffs(den);

    s.expect(apostol_number_stirling_sum(0).is_zero(),
             [] { return std::string("value at n=0 vanishes"); });
    for (unsigned long n = 1; n <= n_max; ++n) {
        const PoleForm ref = quot.coeff(n) * PoleForm(Rat(factorial(n)));
        s.expect_eq(apostol_number_stirling_sum(n), ref,
                    [&] { return at_n("alternating sum vs series", n); });
        s.expect_eq(apostol_number_row_sum(n), ref,
                    [&] { return at_n("single sum vs series", n); });
        s.expect_eq(apostol_number_determinant(n - 1), ref,
                    [&] { return at_n("determinant vs series", n); });
        s.expect(ref.pole_order() <= n,
                 [&] { return at_n("pole order bound", n); });
    }
}

void check_apostol_polynomials(Suite& s, const VerifyOptions& opt) {
    const unsigned long n_max = opt.poly_n_max;
    const std::vector<ABPoly> ser = apostol_poly_series_table(n_max);
    s.expect(ser[0].is_zero() && apostol_poly_stirling_sum(0).is_zero() &&
                 apostol_poly_monomial_sum(0).is_zero(),
             [] { return std::string("value at n=0 vanishes"); });
    for (unsigned long n = 1; n <= n_max; ++n) {
        const ABPoly& ref = ser[n];
        s.expect_eq(apostol_poly_stirling_sum(n), ref,
                    [&] { return at_n("double sum vs series", n); });
        s.expect_eq(apostol_poly_monomial_sum(n), ref,
                    [&] { return at_n("single sum vs series", n); });
        s.expect_eq(apostol_poly_determinant(n - 1), ref,
                    [&] { return at_n("determinant vs series", n); });
        s.expect_eq(apostol_poly_via_bell(n), ref,
                    [&] { return at_n("composite-derivative path vs series", n); });
        s.expect_eq(apostol_poly_via_quotient(n), ref,
                    [&] { return at_n("quotient-derivative path vs series", n); });
        s.expect(ref.degree() == std::optional<std::size_t>(n - 1),
                 [&] { return at_n("degree n-1", n); });
        for (std::size_t t = 0; t < n; ++t) {
            s.expect(ref.coeff(t).pole_order() <= n,
                     [&] { return at_nk("pole order bound", n, t); });
        }
        s.expect_eq(ref.coeff(0), apostol_number_stirling_sum(n),
                    [&] { return at_n("constant term is the number", n); });
    }
}

void check_apostol_point_grid(Suite& s, const VerifyOptions& opt) {
    const unsigned long n_max = opt.poly_n_max;
    const std::vector<Rat> zs{Rat(2), Rat(-1), Rat(1, 2), Rat(3, 5)};
    const std::vector<Rat> us{Rat(0), Rat(1, 3), Rat(1)};
    const std::vector<ABPoly> sym = apostol_poly_series_table(n_max);
    std::vector<ABPoly> det_sym;
    det_sym.reserve(n_max + 1);
    det_sym.emplace_back();
    for (unsigned long n = 1; n <= n_max; ++n) {
        det_sym.push_back(apostol_poly_determinant(n - 1));
    }

    for (const Rat& z : zs) {
        const std::vector<UPolyRat> at = apostol_poly_series_table_at(n_max, z);
        const std::vector<Rat> numbers = apostol_number_series_table_at(n_max, z);
        const auto zs_str = z.to_string();
        for (unsigned long n = 0; n <= n_max; ++n) {
            const auto ctx = [&](const char* what, const Rat& u) {
                return [&, what] {
                    return at_n(what, n) + ", z=" + zs_str + ", u=" + u.to_string();
                };
            };
            s.expect_eq(numbers[n], at[n].coeff(0),
                        [&] {
                            return "number vs polynomial series at n=" +
                                   std::to_string(n) + ", z=" + zs_str;
                        });
            for (const Rat& u : us) {
                const Rat ref = at[n].eval(u);
                s.expect_eq(apostol_poly_eval(sym[n], z, u), ref,
                            ctx("symbolic series evaluation", u));
                s.expect_eq(apostol_poly_eval(det_sym[n], z, u), ref,
                            ctx("determinant evaluation", u));
                s.expect_eq(apostol_via_bell_at(n, z, u), ref,
                            ctx("composite-derivative path", u));
                s.expect_eq(apostol_via_quotient_at(n, z, u), ref,
                            ctx("quotient-derivative path", u));
                s.expect_eq(apostol_eval(n, z, u, ApostolFormula::stirling), ref,
                            ctx("point evaluation, alternating sum", u));
                s.expect_eq(apostol_eval(n, z, u, ApostolFormula::monomial), ref,
                            ctx("point evaluation, single sum", u));
                s.expect_eq(apostol_eval(n, z, u, ApostolFormula::series), ref,
                            ctx("point evaluation, series", u));
                if (n <= 5) {
                    s.expect_eq(apostol_eval(n, z, u, ApostolFormula::determinant),
                                ref, ctx("point evaluation, determinant", u));
                }
            }
        }
    }
}

void check_hand_values(Suite& s) {
    const std::vector<Rat> rec = bernoulli_recurrence_table(4);
    s.expect_eq(rec[0], Rat(1), [] { return std::string("number at n=0"); });
    s.expect_eq(rec[1], Rat(-1, 2), [] { return std::string("number at n=1"); });
    s.expect_eq(rec[2], Rat(1, 6), [] { return std::string("number at n=2"); });
    s.expect_eq(rec[3], Rat(0), [] { return std::string("number at n=3"); });
    s.expect_eq(rec[4], Rat(-1, 30), [] { return std::string("number at n=4"); });

    const std::vector<UPolyRat> ps = bernoulli_poly_series_table(2);
    s.expect_eq(ps[1], UPolyRat::from_coeffs({Rat(-1, 2), Rat(1)}),
                [] { return std::string("polynomial at n=1"); });
    s.expect_eq(ps[2], UPolyRat::from_coeffs({Rat(1, 6), Rat(-1), Rat(1)}),
                [] { return std::string("polynomial at n=2"); });

    const ABPoly b1 = apostol_poly_stirling_sum(1);
    s.expect_eq(b1, ABPoly::from_coeffs({PoleForm(ZPoly::from_coeffs({Rat(1)}), 1)}),
                [] { return std::string("symbolic value at n=1"); });
    s.expect(b1.to_string() == "1/(z-1)",
             [&] { return "printed form at n=1: " + b1.to_string(); });

    const ABPoly b2 = apostol_poly_stirling_sum(2);
    const ABPoly b2_expected = ABPoly::from_coeffs({
        PoleForm(ZPoly::from_coeffs({Rat(0), Rat(-2)}), 2),
        PoleForm(ZPoly::from_coeffs({Rat(2)}), 1),
    });
    s.expect_eq(b2, b2_expected, [] { return std::string("symbolic value at n=2"); });
    s.expect_eq(apostol_number_stirling_sum(2),
                PoleForm(ZPoly::from_coeffs({Rat(0), Rat(-2)}), 2),
                [] { return std::string("symbolic number at n=2"); });
    s.expect_eq(apostol_eval(2, Rat(2), Rat(0), ApostolFormula::stirling), Rat(-4),
                [] { return std::string("point value at n=2, z=2"); });
    s.expect_eq(apostol_eval(3, Rat(2), Rat(0), ApostolFormula::series), Rat(18),
                [] { return std::string("point value at n=3, z=2"); });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const auto run = [&](const char* name, auto&& body) {
        Suite suite(name);
        try {
            body(suite);
        } catch (const std::exception& e) {
            suite.result.passed = false;
            suite.result.detail = std::string("unexpected exception: ") + e.what();
        }
        results.push_back(std::move(suite.result));
    };

    run("exact-arithmetic", [&](Suite& s) { check_exact_arithmetic(s, options); });
    run("stirling-triangle", [&](Suite& s) { check_stirling_consistency(s); });
    run("stirling-column-series",
        [&](Suite& s) { check_stirling_column_series(s); });
    run("bell-argument-addition", [&](Suite& s) { check_bell_addition(s, options); });
    run("bell-argument-scaling", [&](Suite& s) { check_bell_scaling(s, options); });
    run("bell-all-ones", [&](Suite& s) { check_bell_all_ones(s); });
    run("derivative-calculus",
        [&](Suite& s) { check_derivative_calculus(s, options); });
    run("classical-numbers", [&](Suite& s) { check_classical_numbers(s, options); });
    run("classical-polynomials",
        [&](Suite& s) { check_classical_polynomials(s, options); });
    run("apostol-numbers", [&](Suite& s) { check_apostol_numbers(s, options); });
    run("apostol-polynomials",
        [&](Suite& s) { check_apostol_polynomials(s, options); });
    run("apostol-point-grid",
        [&](Suite& s) { check_apostol_point_grid(s, options); });
    run("hand-checked-values", [&](Suite& s) { check_hand_values(s); });
    return results;
}

}  // namespace abexact
