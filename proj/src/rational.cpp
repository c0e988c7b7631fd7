#include "posvote/rational.hpp"

#include <cctype>

namespace posvote {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num_part = s.substr(0, slash);
    if (!valid_integer_token(num_part)) {
        throw ParseError("invalid rational '" + std::string(s) + "'");
    }
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(mpz_class(std::string(num_part), 10));
    } else {
        std::string_view den_part = s.substr(slash + 1);
        if (!valid_integer_token(den_part)) {
            throw ParseError("invalid rational '" + std::string(s) + "'");
        }
        mpz_class den(std::string(den_part), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        v = mpq_class(mpz_class(std::string(num_part), 10), den);
    }
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class pow10(1);
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    // round(|v| * 10^digits), half away from zero
    mpz_class num = numerator() * pow10;
    mpz_class den = denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;

    std::string s = q.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) {
            s.insert(0, digits + 1 - s.size(), '0');
        }
        s.insert(s.size() - digits, ".");
    }
    if (neg && q != 0) s.insert(0, "-");
    return s;
}

}  // namespace posvote
