#include "abexact/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace abexact {

namespace {

void require_nonzero_den(const Int& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
    require_nonzero_den(Int(den));
    v_.canonicalize();
}

Rat::Rat(const Int& num, const Int& den) : v_(num, den) {
    require_nonzero_den(den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw std::invalid_argument("bad rational literal: '" + text + "'");
        }
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
    return Rat(Int(num), Int(den));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rat::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

Rat exact_div(const Rat& a, const Rat& b) {
    return a / b;
}

Rat ring_inverse(const Rat& a) {
    if (a.is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rat(1) / a;
}

}  // namespace abexact
