#include "abexact/bernoulli.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "abexact/combinatorics.hpp"
#include "abexact/matrix.hpp"
#include "abexact/series.hpp"

namespace abexact {

namespace {

void require_positive_index(unsigned long n, const char* formula) {
    if (n == 0) {
        throw std::domain_error(std::string(formula) +
                                " is defined for n >= 1; B_0 = 1 comes from "
                                "the recurrence or series oracle");
    }
}

/// S(m, i) for all m <= max_m, i <= m, each value from the explicit
/// alternating sum (the closed forms never read the recurrence table).
std::vector<std::vector<Int>> stirling_sum_grid(unsigned long max_m) {
    std::vector<std::vector<Int>> s(max_m + 1);
    for (unsigned long m = 0; m <= max_m; ++m) {
        s[m].reserve(m + 1);
        for (unsigned long i = 0; i <= m; ++i) {
            s[m].push_back(stirling2_sum(m, i));
        }
    }
    return s;
}

/// Coefficients of (1-u)^d - (-u)^d in the u-power basis.
std::vector<Rat> one_minus_u_minus_minus_u(unsigned long d) {
    std::vector<Rat> c(d + 1, Rat(0));
    for (unsigned long t = 0; t <= d; ++t) {
        Rat b(binomial(static_cast<long>(d), static_cast<long>(t)));
        c[t] += (t % 2 == 0) ? b : -b;
    }
    Rat top(1);
    if (d % 2 == 1) top = Rat(-1);
    c[d] -= top;
    return c;
}

void composition_dfs(unsigned long part, unsigned long weight_left,
                     std::vector<unsigned long>& counts, unsigned long n,
                     Rat& total) {
    if (weight_left == 0) {
        unsigned long j = 0;
        for (unsigned long c : counts) j += c;
        if (j == 0) return;
        Int num = factorial(j);
        Int den(1);
        for (unsigned long t = 1; t <= n; ++t) {
            if (counts[t - 1] == 0) continue;
            den *= factorial(counts[t - 1]);
            Int pf;
            const Int f = factorial(t + 1);
            mpz_pow_ui(pf.get_mpz_t(), f.get_mpz_t(), counts[t - 1]);
            den *= pf;
        }
        Rat term(num, den);
        total += (j % 2 == 0) ? term : -term;
        return;
    }
    if (part > n || part > weight_left) return;
    for (unsigned long c = 0; c * part <= weight_left; ++c) {
        counts[part - 1] = c;
        composition_dfs(part + 1, weight_left - c * part, counts, n, total);
    }
    counts[part - 1] = 0;
}

}  // namespace

std::vector<Rat> bernoulli_recurrence_table(unsigned long n_max) {
    std::vector<Rat> b;
    b.reserve(n_max + 1);
    b.push_back(Rat(1));
    for (unsigned long n = 1; n <= n_max; ++n) {
        Rat acc(0);
        for (unsigned long k = 0; k < n; ++k) {
            acc += Rat(binomial(static_cast<long>(n) + 1,
                                static_cast<long>(k))) *
                   b[k];
        }
        b.push_back(-acc / Rat(static_cast<long>(n) + 1));
    }
    return b;
}

Rat bernoulli_recurrence(unsigned long n) {
    return bernoulli_recurrence_table(n).back();
}

std::vector<UPolyRat> bernoulli_poly_series_table(unsigned long n_max) {
    const std::size_t order = n_max + 1;
    std::vector<UPolyRat> num_cs, den_cs;
    for (std::size_t j = 0; j <= order; ++j) {
        const Rat inv_jf(Int(1), factorial(j));
        num_cs.push_back(UPolyRat::monomial(inv_jf, j));
        den_cs.push_back(UPolyRat(Rat(Int(1), factorial(j + 1))));
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

UPolyRat bernoulli_poly_series(unsigned long n) {
    return bernoulli_poly_series_table(n).back();
}

std::vector<Rat> bernoulli_number_series_table(unsigned long n_max) {
    const std::size_t order = n_max + 1;
    std::vector<Rat> num_cs(order + 1, Rat(0)), den_cs;
    num_cs[0] = Rat(1);
    for (std::size_t j = 0; j <= order; ++j) {
        den_cs.push_back(Rat(Int(1), factorial(j + 1)));
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

Rat bernoulli_number_series(unsigned long n) {
    return bernoulli_number_series_table(n).back();
}

Rat bernoulli_number_composition_sum(unsigned long n) {
    require_positive_index(n, "the composition sum");
    if (n > kCompositionSumMaxN) {
        throw std::domain_error(
            "the composition sum enumerates too many partitions past n = 25");
    }
    Rat total(0);
    std::vector<unsigned long> counts(n, 0);
    composition_dfs(1, n, counts, n, total);
    return total * Rat(factorial(n));
}

Rat bernoulli_number_stirling_sum(unsigned long n) {
    require_positive_index(n, "the Stirling sum");
    Rat total(0);
    for (unsigned long i = 1; i <= n; ++i) {
        const Int s = stirling2_sum(n + i, i);
        if (sgn(s) == 0) continue;
        Rat weight(binomial(static_cast<long>(n) + 1, static_cast<long>(i) + 1),
                   binomial(static_cast<long>(n + i), static_cast<long>(i)));
        Rat term = weight * Rat(s);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

Rat bernoulli_number_determinant(unsigned long n) {
    require_positive_index(n, "the determinant form");
    // Entries above the Hessenberg band vanish: they carry the factor
    // (1-u)^(l-col+1) - (-u)^(l-col+1), which is zero at col = l+1 for
    // every u, including the u = 0 specialization taken here.
    SquareMatrix<Rat> m(n);
    for (unsigned long l = 1; l <= n; ++l) {
        for (unsigned long col = 0; col < n && col <= l; ++col) {
            m.at(l - 1, col) =
                Rat(binomial(static_cast<long>(l) + 1,
                             static_cast<long>(col)),
                    Int(static_cast<unsigned long>(l + 1)));
        }
    }
    Rat det = determinant(m);
    return (n % 2 == 0) ? det : -det;
}

UPolyRat bernoulli_poly_stirling_sum(unsigned long n) {
    require_positive_index(n, "the Stirling double sum");
    const auto s = stirling_sum_grid(2 * n);
    std::vector<Rat> acc(2 * n + 1, Rat(0));
    for (unsigned long k = 1; k <= n; ++k) {
        const Rat kf(factorial(k));
        for (unsigned long r = 0; r <= k; ++r) {
            const unsigned long sc = k - r;
            for (unsigned long l = 0; l <= n; ++l) {
                const unsigned long m = n - l;
                // Inner double sum as one exact integer.
                Int inner(0);
                for (unsigned long i = 0; i <= r; ++i) {
                    const Int s1 = s[l + i][i];
                    if (sgn(s1) == 0) continue;
                    for (unsigned long j = 0; j <= sc; ++j) {
                        const Int s2 = s[m + j][j];
                        if (sgn(s2) == 0) continue;
                        Int t = binomial(static_cast<long>(l + r),
                                         static_cast<long>(r - i)) *
                                binomial(static_cast<long>(m + sc),
                                         static_cast<long>(sc - j)) *
                                s1 * s2;
                        if ((i + j) % 2 == 0) {
                            inner += t;
                        } else {
                            inner -= t;
                        }
                    }
                }
                if (sgn(inner) == 0) continue;
                Rat pref = kf *
                           Rat(binomial(static_cast<long>(n),
                                        static_cast<long>(l))) *
                           Rat(factorial(l), factorial(l + r)) *
                           Rat(factorial(m), factorial(m + sc)) * Rat(inner);
                if (m % 2 == 1) pref = -pref;
                // u^(m+sc) * (1-u)^(l+r) expanded into the u basis.
                for (unsigned long t = 0; t <= l + r; ++t) {
                    Rat c(binomial(static_cast<long>(l + r),
                                   static_cast<long>(t)));
                    if (t % 2 == 1) c = -c;
                    acc[m + sc + t] += pref * c;
                }
            }
        }
    }
    return UPolyRat::from_coeffs(std::move(acc));
}

UPolyRat bernoulli_poly_determinant(unsigned long n) {
    require_positive_index(n, "the determinant form");
    SquareMatrix<UPolyRat> mat(n);
    for (unsigned long l = 1; l <= n; ++l) {
        for (unsigned long col = 0; col < n; ++col) {
            if (col > l + 1) continue;
            const Rat scale(binomial(static_cast<long>(l) + 1,
                                     static_cast<long>(col)),
                            Int(static_cast<unsigned long>(l + 1)));
            if (scale.is_zero()) continue;
            auto cs = one_minus_u_minus_minus_u(l + 1 - col);
            mat.at(l - 1, col) = UPolyRat::from_coeffs(std::move(cs)) * scale;
        }
    }
    UPolyRat det = determinant(mat);
    return (n % 2 == 0) ? det : -det;
}

}  // namespace abexact
