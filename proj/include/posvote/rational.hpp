// Exact rational arithmetic. Thin value wrapper around GMP's mpq_class:
// always canonical (lowest terms, positive denominator), never rounds.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posvote {

// Thrown for malformed textual input (rational strings, JSON payloads).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}  // NOLINT: implicit by design, 3 * r reads naturally
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "num/den" or a bare integer, e.g. "-73/4", "5".
    static Rational from_string(std::string_view s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "num/den", or just "num" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }
    // Decimal approximation with `digits` places, round-half-away-from-zero.
    std::string to_decimal(int digits) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// Least common multiple of the denominators of a range of Rationals.
template <typename It>
mpz_class common_denominator(It first, It last) {
    mpz_class d(1);
    for (; first != last; ++first) {
        mpz_class den = first->denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    return d;
}

}  // namespace posvote
