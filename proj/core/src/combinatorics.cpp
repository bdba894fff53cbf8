#include "abexact/combinatorics.hpp"

#include <stdexcept>

namespace abexact {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long p, long q) {
    if (p < 0) {
        throw std::domain_error("binomial with negative upper index");
    }
    if (q < 0 || q > p) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p),
                 static_cast<unsigned long>(q));
    return r;
}

Int stirling2_sum(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    if (n == 0) return Int(1);
    if (k == 0) return Int(0);
    Int sum(0);
    for (unsigned long j = 1; j <= k; ++j) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), j, n);
        Int term = binomial(static_cast<long>(k), static_cast<long>(j)) * pw;
        if ((k - j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const Int kf = factorial(k);
    if (mpz_divisible_p(sum.get_mpz_t(), kf.get_mpz_t()) == 0) {
        throw std::logic_error("stirling sum not divisible by k!");
    }
    Int r;
    mpz_divexact(r.get_mpz_t(), sum.get_mpz_t(), kf.get_mpz_t());
    return r;
}

StirlingTable::StirlingTable(unsigned long max_n) : max_n_(max_n) {
    rows_.resize(max_n + 1);
    for (unsigned long n = 0; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Int(0));
    }
    rows_[0][0] = 1;
    for (unsigned long n = 1; n <= max_n; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            const Int above = k <= n - 1 ? rows_[n - 1][k] : Int(0);
            rows_[n][k] = Int(k) * above + rows_[n - 1][k - 1];
        }
    }
}

Int StirlingTable::at(unsigned long n, unsigned long k) const {
    if (n > max_n_) {
        throw std::invalid_argument("stirling table built to a smaller n");
    }
    if (k > n) return Int(0);
    return rows_[n][k];
}

namespace detail {

namespace {

void bell_dfs(std::size_t idx, unsigned long parts_left,
              unsigned long weight_left, std::vector<unsigned long>& l,
              const std::function<void(const std::vector<unsigned long>&)>& emit) {
    if (idx == l.size()) {
        if (parts_left == 0 && weight_left == 0) emit(l);
        return;
    }
    const unsigned long part = static_cast<unsigned long>(idx) + 1;
    const unsigned long max_count =
        std::min(parts_left, weight_left / part);
    for (unsigned long c = 0; c <= max_count; ++c) {
        l[idx] = c;
        bell_dfs(idx + 1, parts_left - c, weight_left - c * part, l, emit);
    }
    l[idx] = 0;
}

}  // namespace

void enumerate_bell_vectors(
    unsigned long n, unsigned long k,
    const std::function<void(const std::vector<unsigned long>&)>& emit) {
    if (k == 0 || k > n) return;
    std::vector<unsigned long> l(n - k + 1, 0);
    bell_dfs(0, k, n, l, emit);
}

Int bell_multinomial(unsigned long n, const std::vector<unsigned long>& l) {
    Int den(1);
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0) continue;
        den *= factorial(l[i]);
        Int pf;
        const Int f = factorial(static_cast<unsigned long>(i) + 1);
        mpz_pow_ui(pf.get_mpz_t(), f.get_mpz_t(), l[i]);
        den *= pf;
    }
    const Int num = factorial(n);
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw std::logic_error("bell multinomial not an integer");
    }
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

}  // namespace detail

}  // namespace abexact
