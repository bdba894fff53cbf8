#include "abexact/pole_form.hpp"

#include <stdexcept>
#include <utility>

#include "abexact/ring.hpp"

namespace abexact {

namespace {

/// Splits p as core * (z-1)^j with core(1) != 0 (j = 0 for p == 0).
std::pair<ZPoly, std::size_t> strip_pole_factors(ZPoly p) {
    std::size_t j = 0;
    if (p.is_zero()) return {p, j};
    const ZPoly zm1 = z_minus_one();
    while (p.eval(Rat(1)).is_zero()) {
        p = exact_div(p, zm1);
        ++j;
    }
    return {std::move(p), j};
}

}  // namespace

ZPoly z_minus_one() {
    return ZPoly::from_coeffs({Rat(-1), Rat(1)});
}

PoleForm::PoleForm(ZPoly num, std::size_t pole_order)
    : num_(std::move(num)), e_(pole_order) {
    if (num_.is_zero()) {
        e_ = 0;
        return;
    }
    const ZPoly zm1 = z_minus_one();
    while (e_ > 0 && num_.eval(Rat(1)).is_zero()) {
        num_ = exact_div(num_, zm1);
        --e_;
    }
}

PoleForm operator+(const PoleForm& a, const PoleForm& b) {
    const std::size_t e = std::max(a.e_, b.e_);
    const ZPoly zm1 = z_minus_one();
    ZPoly num = a.num_ * ring_pow(zm1, e - a.e_) +
                b.num_ * ring_pow(zm1, e - b.e_);
    return PoleForm(std::move(num), e);
}

PoleForm operator-(const PoleForm& a, const PoleForm& b) {
    return a + (-b);
}

PoleForm operator*(const PoleForm& a, const PoleForm& b) {
    return PoleForm(a.num_ * b.num_, a.e_ + b.e_);
}

PoleForm PoleForm::operator-() const {
    PoleForm r;
    r.num_ = -num_;
    r.e_ = e_;
    return r;
}

Rat PoleForm::eval(const Rat& z) const {
    if (e_ > 0 && z == Rat(1)) {
        throw std::domain_error("evaluation at the pole z = 1");
    }
    Rat value = num_.eval(z);
    if (e_ > 0) {
        value /= ring_pow(z - Rat(1), e_);
    }
    return value;
}

std::string PoleForm::to_string() const {
    std::string num = num_.to_string();
    if (e_ == 0) return num;
    for (std::size_t i = 0; i < num.size(); ++i) {
        const char c = num[i];
        if (c == '/' || c == '+' || (c == '-' && i > 0)) {
            num = "(" + num + ")";
            break;
        }
    }
    std::string den = "(z-1)";
    if (e_ >= 2) den += "^" + std::to_string(e_);
    return num + "/" + den;
}

PoleForm ring_inverse(const PoleForm& a) {
    if (a.is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    auto [core, j] = strip_pole_factors(a.num());
    if (core.degree() != std::optional<std::size_t>(0)) {
        throw std::domain_error(
            "inverse exists only for c*(z-1)^k, got " + a.to_string());
    }
    // a = c * (z-1)^(j - e); the inverse flips both factors.
    const ZPoly inv_c(ring_inverse(core.coeff(0)));
    const long t = static_cast<long>(a.pole_order()) - static_cast<long>(j);
    if (t >= 0) {
        return PoleForm(inv_c * ring_pow(z_minus_one(),
                                         static_cast<std::size_t>(t)));
    }
    return PoleForm(inv_c, static_cast<std::size_t>(-t));
}

PoleForm exact_div(const PoleForm& a, const PoleForm& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (a.is_zero()) return PoleForm();
    auto [core_a, ja] = strip_pole_factors(a.num());
    auto [core_b, jb] = strip_pole_factors(b.num());
    // a/b = (core_a/core_b) * (z-1)^t with all (z-1) content in t.
    ZPoly q = exact_div(core_a, core_b);
    const long t = (static_cast<long>(ja) - static_cast<long>(a.pole_order())) -
                   (static_cast<long>(jb) - static_cast<long>(b.pole_order()));
    if (t >= 0) {
        return PoleForm(q * ring_pow(z_minus_one(),
                                     static_cast<std::size_t>(t)));
    }
    return PoleForm(std::move(q), static_cast<std::size_t>(-t));
}

}  // namespace abexact
