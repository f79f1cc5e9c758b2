#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals,
// generalized binomials and factorials. Nothing in the library uses
// floating point or fixed-width integer arithmetic on values.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cdiff {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin wrapper over GMP's mpq_class. GMP keeps arithmetic results canonical;
/// the wrapper adds checked construction and checked division so a zero
/// denominator is a C++ exception rather than a floating point trap.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT
    Rational(const Integer& v) : value_(v) {}  // NOLINT
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p" or "p/q" (decimal, optional leading sign on p).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(Integer(std::string(text), 10));
            return Rational(Integer(std::string(text.substr(0, slash)), 10),
                            Integer(std::string(text.substr(slash + 1)), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Numerator when the value is integral; throws otherwise.
    Integer to_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
        return value_.get_num();
    }

    /// "p/q", with "/q" omitted when q == 1.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
        return r;
    }

    Rational operator-() const { return from_raw(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_{0};
};

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

/// base^exp for exp >= 0 (0^0 == 1).
inline Rational pow(const Rational& base, std::size_t exp) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational(n, d);
}

inline Integer ipow(const Integer& base, std::size_t exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// (-1)^k
inline int sign_pow(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

inline Integer factorial(std::size_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// n!! with 0!! = 1.
inline Integer double_factorial(std::size_t n) {
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Ordinary binomial C(n, k) for nonnegative integers; zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Generalized binomial C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!.
inline Rational binomial_general(const Rational& alpha, std::size_t k) {
    Rational r(1);
    for (std::size_t j = 0; j < k; ++j) {
        r *= alpha - Rational(static_cast<long>(j));
    }
    return r / Rational(factorial(k));
}

}  // namespace cdiff
