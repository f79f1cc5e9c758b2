#pragma once

#include "cdiff/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cdiff {

/// Dense univariate polynomial with Rational coefficients; coeff(i) is the
/// coefficient of x^i. Trailing zeros are trimmed, so the zero polynomial has
/// no stored coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}         // NOLINT
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1)) {
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return Polynomial(std::move(cs));
    }

    /// x + c
    static Polynomial linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return Polynomial(std::move(out));
    }

    /// p(x + c)
    Polynomial shifted(const Rational& c) const {
        Polynomial acc;
        Polynomial step = linear(c);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Polynomial(*it);
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, Polynomial p) {
        if (s.is_zero()) return {};
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest power first, e.g. "x^3 - 1/4*x".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool unit = mag == Rational(1);
            if (i == 0 || !unit) out += mag.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& p, std::size_t k) {
    Polynomial result(Rational(1));
    Polynomial base = p;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Polynomial& p) { return p.str(); }

}  // namespace cdiff
