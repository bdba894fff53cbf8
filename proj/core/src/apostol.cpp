#include "abexact/apostol.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abexact/combinatorics.hpp"
#include "abexact/matrix.hpp"
#include "abexact/series.hpp"

namespace abexact {

namespace {

void require_z_not_one(const Rat& z) {
    if (z == Rat(1)) {
        throw std::domain_error(
            "z = 1 is the classical Bernoulli case; use the classical module");
    }
}

/// Powers (z-1)^0 .. (z-1)^top.
std::vector<ZPoly> pole_powers(unsigned long top) {
    std::vector<ZPoly> p;
    p.reserve(top + 1);
    p.push_back(ZPoly(1L));
    for (unsigned long t = 1; t <= top; ++t) {
        p.push_back(p.back() * z_minus_one());
    }
    return p;
}

ABPoly finish_over_pole(std::vector<ZPoly> nums, unsigned long pole) {
    std::vector<PoleForm> cs;
    cs.reserve(nums.size());
    for (ZPoly& num : nums) {
        cs.push_back(PoleForm(std::move(num), pole));
    }
    return ABPoly::from_coeffs(std::move(cs));
}

/// z(1-u)^j - (-u)^j as a polynomial in u with z-linear coefficients.
ABPoly denominator_deriv(unsigned long j) {
    std::vector<PoleForm> cs(j + 1);
    for (unsigned long t = 0; t <= j; ++t) {
        Rat zc(binomial(static_cast<long>(j), static_cast<long>(t)));
        if (t % 2 == 1) zc = -zc;
        std::vector<Rat> c(2, Rat(0));
        c[1] = zc;
        if (t == j) c[0] = (j % 2 == 0) ? Rat(-1) : Rat(1);
        cs[t] = PoleForm(ZPoly::from_coeffs(std::move(c)));
    }
    return ABPoly::from_coeffs(std::move(cs));
}

}  // namespace

ABPoly apostol_poly_stirling_sum(unsigned long n) {
    if (n == 0) return ABPoly();
    const unsigned long top = n - 1;
    const auto pows = pole_powers(top);
    std::vector<ZPoly> acc(n);
    for (unsigned long k = 0; k <= top; ++k) {
        const Int kf = factorial(k);
        for (unsigned long r = 0; r <= k; ++r) {
            const unsigned long s = k - r;
            for (unsigned long l = 0; l <= top; ++l) {
                const unsigned long m = top - l;
                const Int s1 = stirling2_sum(l, r);
                if (sgn(s1) == 0) continue;
                const Int s2 = stirling2_sum(m, s);
                if (sgn(s2) == 0) continue;
                Rat w(kf * binomial(static_cast<long>(top),
                                    static_cast<long>(l)) *
                      s1 * s2);
                if ((k + s + m) % 2 == 1) w = -w;
                // z^r k-term over the common pole (z-1)^n.
                const ZPoly zc = ZPoly::monomial(w, r) * pows[top - k];
                // u^m (1-u)^l expanded into the u basis.
                for (unsigned long t = 0; t <= l; ++t) {
                    Rat c(binomial(static_cast<long>(l),
                                   static_cast<long>(t)));
                    if (t % 2 == 1) c = -c;
                    acc[m + t] += zc * c;
                }
            }
        }
    }
    for (ZPoly& a : acc) a = a * Rat(static_cast<long>(n));
    return finish_over_pole(std::move(acc), n);
}

PoleForm apostol_number_stirling_sum(unsigned long n) {
    if (n == 0) return PoleForm();
    const unsigned long top = n - 1;
    const auto pows = pole_powers(top);
    ZPoly num;
    for (unsigned long k = 0; k <= top; ++k) {
        const Int s1 = stirling2_sum(top, k);
        if (sgn(s1) == 0) continue;
        Rat w(factorial(k) * s1);
        if (k % 2 == 1) w = -w;
        num += ZPoly::monomial(w, k) * pows[top - k];
    }
    return PoleForm(num * Rat(static_cast<long>(n)), n);
}

ABPoly apostol_poly_determinant(unsigned long n) {
    SquareMatrix<UZPoly> mat(n);
    for (unsigned long l = 1; l <= n; ++l) {
        for (unsigned long col = 0; col < n; ++col) {
            if (l < col) continue;
            const unsigned long d = l - col;
            const Rat b(binomial(static_cast<long>(l),
                                 static_cast<long>(col)));
            std::vector<ZPoly> ucs(d + 1);
            for (unsigned long t = 0; t <= d; ++t) {
                Rat zc = b * Rat(binomial(static_cast<long>(d),
                                          static_cast<long>(t)));
                if (t % 2 == 1) zc = -zc;
                std::vector<Rat> c(2, Rat(0));
                c[1] = zc;
                if (t == d) c[0] = (d % 2 == 0) ? -b : b;
                ucs[t] = ZPoly::from_coeffs(std::move(c));
            }
            mat.at(l - 1, col) = UZPoly::from_coeffs(std::move(ucs));
        }
    }
    UZPoly det = determinant(mat);
    Rat scale(static_cast<long>(n) + 1);
    if (n % 2 == 1) scale = -scale;
    std::vector<ZPoly> nums;
    const std::size_t deg = det.is_zero() ? 0 : *det.degree() + 1;
    nums.reserve(deg);
    for (std::size_t t = 0; t < deg; ++t) {
        nums.push_back(det.coeff(t) * scale);
    }
    return finish_over_pole(std::move(nums), n + 1);
}

PoleForm apostol_number_determinant(unsigned long n) {
    SquareMatrix<ZPoly> mat(n);
    for (unsigned long l = 1; l <= n; ++l) {
        for (unsigned long col = 0; col < n; ++col) {
            const Rat b(binomial(static_cast<long>(l),
                                 static_cast<long>(col)));
            if (b.is_zero()) continue;
            std::vector<Rat> c(2, Rat(0));
            c[1] = b;
            if (l == col) c[0] = -b;
            mat.at(l - 1, col) = ZPoly::from_coeffs(std::move(c));
        }
    }
    ZPoly det = determinant(mat);
    Rat scale(static_cast<long>(n) + 1);
    if (n % 2 == 1) scale = -scale;
    return PoleForm(det * scale, n + 1);
}

ABPoly apostol_poly_monomial_sum(unsigned long n) {
    if (n == 0) return ABPoly();
    const auto pows = pole_powers(n - 1);
    std::vector<ZPoly> acc(n);
    for (unsigned long k = 1; k <= n; ++k) {
        ZPoly inner;
        for (unsigned long j = 0; j + 1 <= k; ++j) {
            const Int s = stirling2_sum(k - 1, j);
            if (sgn(s) == 0) continue;
            Rat w(factorial(j) * s);
            if (j % 2 == 1) w = -w;
            inner += ZPoly::monomial(w, j) * pows[n - 1 - j];
        }
        if (inner.is_zero()) continue;
        const Rat kb = Rat(static_cast<long>(k)) *
                       Rat(binomial(static_cast<long>(n),
                                    static_cast<long>(k)));
        acc[n - k] += inner * kb;
    }
    return finish_over_pole(std::move(acc), n);
}

PoleForm apostol_number_row_sum(unsigned long n) {
    if (n == 0) {
        throw std::domain_error("the row sum is defined for n >= 1");
    }
    const auto pows = pole_powers(n - 1);
    ZPoly num;
    for (unsigned long k = 1; k <= n; ++k) {
        const Int s = stirling2_sum(n, k);
        if (sgn(s) == 0) continue;
        num += ZPoly(Rat(factorial(k - 1) * s)) * pows[n - k];
    }
    Rat scale(static_cast<long>(n));
    if (n % 2 == 0) scale = -scale;
    return PoleForm(num * scale, n);
}

std::vector<ABPoly> apostol_poly_series_table(unsigned long n_max) {
    const std::size_t order = n_max + 1;
    std::vector<ABPoly> num_cs, den_cs;
    num_cs.push_back(ABPoly());
    den_cs.push_back(ABPoly(PoleForm(z_minus_one())));
    for (std::size_t j = 1; j <= order; ++j) {
        num_cs.push_back(
            ABPoly::monomial(PoleForm(Rat(Int(1), factorial(j - 1))), j - 1));
        den_cs.push_back(
            ABPoly(PoleForm(ZPoly::monomial(Rat(Int(1), factorial(j)), 1))));
    }
    const auto q = Series<ABPoly>::from_coeffs(num_cs) /
                   Series<ABPoly>::from_coeffs(den_cs);
    std::vector<ABPoly> out;
    out.reserve(n_max + 1);
    for (unsigned long n = 0; n <= n_max; ++n) {
        out.push_back(q.coeff(n) * PoleForm(Rat(factorial(n))));
    }
    return out;
}

std::vector<UPolyRat> apostol_poly_series_table_at(unsigned long n_max,
                                                   const Rat& z) {
    require_z_not_one(z);
    const std::size_t order = n_max + 1;
    std::vector<UPolyRat> num_cs, den_cs;
    num_cs.push_back(UPolyRat());
    den_cs.push_back(UPolyRat(z - Rat(1)));
    for (std::size_t j = 1; j <= order; ++j) {
        num_cs.push_back(UPolyRat::monomial(Rat(Int(1), factorial(j - 1)),
                                            j - 1));
        den_cs.push_back(UPolyRat(z * Rat(Int(1), factorial(j))));
    }
    const auto q = Series<UPolyRat>::from_coeffs(num_cs) /
                   Series<UPolyRat>::from_coeffs(den_cs);
    std::vector<UPolyRat> out;
    out.reserve(n_max + 1);
    for (unsigned long n = 0; n <= n_max; ++n) {
        out.push_back(q.coeff(n) * Rat(factorial(n)));
    }
    return out;
}

std::vector<Rat> apostol_number_series_table_at(unsigned long n_max,
                                                const Rat& z) {
    require_z_not_one(z);
    const std::size_t order = n_max + 1;
    std::vector<Rat> num_cs(order + 1, Rat(0)), den_cs;
    num_cs[1] = Rat(1);
    den_cs.push_back(z - Rat(1));
    for (std::size_t j = 1; j <= order; ++j) {
        den_cs.push_back(z * Rat(Int(1), factorial(j)));
    }
    const auto q = Series<Rat>::from_coeffs(num_cs) /
                   Series<Rat>::from_coeffs(den_cs);
    std::vector<Rat> out;
    out.reserve(n_max + 1);
    for (unsigned long n = 0; n <= n_max; ++n) {
        out.push_back(q.coeff(n) * Rat(factorial(n)));
    }
    return out;
}

DerivSeq<ABPoly> apostol_denominator_derivs(unsigned long n) {
    DerivSeq<ABPoly> g;
    g.reserve(n + 1);
    for (unsigned long j = 0; j <= n; ++j) {
        g.push_back(denominator_deriv(j));
    }
    return g;
}

DerivSeq<Rat> apostol_denominator_derivs_at(unsigned long n, const Rat& z,
                                            const Rat& u) {
    DerivSeq<Rat> g;
    g.reserve(n + 1);
    const Rat omu = Rat(1) - u;
    Rat p1(1), p2(1);
    for (unsigned long j = 0; j <= n; ++j) {
        g.push_back(z * p1 - p2);
        p1 *= omu;
        p2 *= -u;
    }
    return g;
}

ABPoly apostol_poly_via_bell(unsigned long n) {
    if (n == 0) return ABPoly();
    const auto f =
        reciprocal_derivs(ABPoly(PoleForm(z_minus_one())), n - 1);
    const auto g = apostol_denominator_derivs(n - 1);
    DerivSeq<ABPoly> composite;
    composite.reserve(n);
    for (unsigned long j = 0; j + 1 <= n; ++j) {
        composite.push_back(faa_di_bruno(f, g, j));
    }
    return leibniz_x_times(composite, n);
}

ABPoly apostol_poly_via_quotient(unsigned long n) {
    if (n == 0) return ABPoly();
    DerivSeq<ABPoly> mu(n, ABPoly());
    mu[0] = ABPoly(PoleForm(1L));
    const auto nu = apostol_denominator_derivs(n - 1);
    DerivSeq<ABPoly> quotient;
    quotient.reserve(n);
    for (unsigned long j = 0; j + 1 <= n; ++j) {
        quotient.push_back(quotient_derivative(mu, nu, j));
    }
    return leibniz_x_times(quotient, n);
}

Rat apostol_via_bell_at(unsigned long n, const Rat& z, const Rat& u) {
    require_z_not_one(z);
    if (n == 0) return Rat(0);
    const auto f = reciprocal_derivs(z - Rat(1), n - 1);
    const auto g = apostol_denominator_derivs_at(n - 1, z, u);
    DerivSeq<Rat> composite;
    composite.reserve(n);
    for (unsigned long j = 0; j + 1 <= n; ++j) {
        composite.push_back(faa_di_bruno(f, g, j));
    }
    return leibniz_x_times(composite, n);
}

Rat apostol_via_quotient_at(unsigned long n, const Rat& z, const Rat& u) {
    require_z_not_one(z);
    if (n == 0) return Rat(0);
    DerivSeq<Rat> mu(n, Rat(0));
    mu[0] = Rat(1);
    const auto nu = apostol_denominator_derivs_at(n - 1, z, u);
    DerivSeq<Rat> quotient;
    quotient.reserve(n);
    for (unsigned long j = 0; j + 1 <= n; ++j) {
        quotient.push_back(quotient_derivative(mu, nu, j));
    }
    return leibniz_x_times(quotient, n);
}

Rat apostol_poly_eval(const ABPoly& p, const Rat& z, const Rat& u) {
    require_z_not_one(z);
    return p.map([&](const PoleForm& c) { return c.eval(z); }).eval(u);
}

Rat apostol_eval(unsigned long n, const Rat& z, const Rat& u,
                 ApostolFormula formula) {
    require_z_not_one(z);
    if (n == 0) return Rat(0);
    switch (formula) {
        case ApostolFormula::stirling:
            return apostol_poly_eval(apostol_poly_stirling_sum(n), z, u);
        case ApostolFormula::determinant:
            return apostol_poly_eval(apostol_poly_determinant(n - 1), z, u);
        case ApostolFormula::monomial:
            return apostol_poly_eval(apostol_poly_monomial_sum(n), z, u);
        case ApostolFormula::series:
            return apostol_poly_series_table_at(n, z).back().eval(u);
    }
    throw std::invalid_argument("unknown formula tag");
}

}  // namespace abexact
