#pragma once

// Truncated formal power series over an exact coefficient ring.
//
// PowerSeries<Rational> is the brute-force oracle behind every number family
// in the library. PowerSeries<Polynomial> carries bivariate generating
// functions as series in y whose coefficients are polynomials in x.

#include "cdiff/polynomial.hpp"
#include "cdiff/rational.hpp"

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdiff {

/// Coefficient rings usable in a PowerSeries: a commutative ring with a zero
/// default value, embedding of the rationals, and scaling by a rational.
template <typename R>
concept CoefficientRing = std::default_initializable<R> && std::equality_comparable<R> &&
    std::constructible_from<R, Rational> && requires(const R& a, const R& b, const Rational& s) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { s * a } -> std::convertible_to<R>;
        { is_zero(a) } -> std::convertible_to<bool>;
    };

template <CoefficientRing R>
class PowerSeries {
public:
    using coefficient_type = R;

    /// Zero series with coefficients for x^0..x^order.
    explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    explicit PowerSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: needs at least one coefficient");
    }

    static PowerSeries constant(const R& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static PowerSeries one(std::size_t order) { return constant(R(Rational(1)), order); }

    /// The identity series x (just 0 when order == 0).
    static PowerSeries identity(std::size_t order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = R(Rational(1));
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }

    /// k-th coefficient; throws std::out_of_range past the truncation order.
    const R& coefficient(std::size_t k) const {
        if (k > order()) {
            throw std::out_of_range("PowerSeries: coefficient " + std::to_string(k) + " beyond order " +
                                    std::to_string(order()));
        }
        return coeffs_[k];
    }
    const R& operator[](std::size_t k) const { return coeffs_[k]; }
    R& operator[](std::size_t k) { return coeffs_[k]; }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend truncation order");
        return PowerSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
    }

    PowerSeries operator-() const {
        PowerSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b, "add");
        PowerSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b, "subtract");
        PowerSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b, "multiply");
        const std::size_t n = a.order();
        PowerSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    friend PowerSeries operator*(const Rational& c, const PowerSeries& f) {
        PowerSeries r(f.order());
        if (c.is_zero()) return r;
        for (std::size_t i = 0; i <= f.order(); ++i) r.coeffs_[i] = c * f.coeffs_[i];
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* what) {
        if (a.order() != b.order()) {
            throw std::invalid_argument(std::string("PowerSeries: cannot ") + what + " series of orders " +
                                        std::to_string(a.order()) + " and " + std::to_string(b.order()));
        }
    }

    std::vector<R> coeffs_;
};

using Series = PowerSeries<Rational>;
using PolySeries = PowerSeries<Polynomial>;

template <CoefficientRing R>
PowerSeries<R> ps_add(const PowerSeries<R>& f, const PowerSeries<R>& g) { return f + g; }

template <CoefficientRing R>
PowerSeries<R> ps_mul(const PowerSeries<R>& f, const PowerSeries<R>& g) { return f * g; }

template <CoefficientRing R>
PowerSeries<R> ps_scale(const PowerSeries<R>& f, const Rational& c) { return c * f; }

/// 1/f; requires a nonzero constant term.
inline Series ps_reciprocal(const Series& f) {
    if (f[0].is_zero()) throw std::domain_error("ps_reciprocal: constant term is zero");
    const std::size_t n = f.order();
    const Rational inv0 = f[0].inverse();
    Series g(n);
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!f[j].is_zero()) acc += f[j] * g[k - j];
        }
        g[k] = -acc * inv0;
    }
    return g;
}

/// f(g(x)) truncated at g's order, evaluated Horner-style. f is taken to the
/// same order as g; requires g(0) == 0.
template <CoefficientRing R>
PowerSeries<R> ps_compose(const Series& f, const PowerSeries<R>& g) {
    if (!is_zero(g[0])) throw std::domain_error("ps_compose: inner series has nonzero constant term");
    const std::size_t n = g.order();
    if (f.order() < n) throw std::invalid_argument("ps_compose: outer series order below inner order");
    PowerSeries<R> acc(n);
    for (std::size_t k = n + 1; k-- > 0;) {
        acc = acc * g;
        acc[0] = acc[0] + R(f[k]);
    }
    return acc;
}

/// f^r for any integer r; negative powers need a nonzero constant term.
inline Series ps_pow(const Series& f, long r) {
    if (r < 0) {
        if (f[0].is_zero()) throw std::domain_error("ps_pow: negative power of series with zero constant term");
        return ps_pow(ps_reciprocal(f), -r);
    }
    Series result = Series::one(f.order());
    Series base = f;
    auto e = static_cast<unsigned long>(r);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

/// d/dx; the result has order one less (an order-0 series has no derivative).
template <CoefficientRing R>
PowerSeries<R> ps_derivative(const PowerSeries<R>& f) {
    if (f.order() == 0) throw std::invalid_argument("ps_derivative: order-0 series");
    PowerSeries<R> d(f.order() - 1);
    for (std::size_t k = 1; k <= f.order(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * f[k];
    return d;
}

/// Formal antiderivative with zero constant term; order grows by one.
template <CoefficientRing R>
PowerSeries<R> ps_integral(const PowerSeries<R>& f) {
    PowerSeries<R> s(f.order() + 1);
    for (std::size_t k = 0; k <= f.order(); ++k) s[k + 1] = Rational(1, static_cast<long>(k + 1)) * f[k];
    return s;
}

/// f(c x)
inline Series ps_dilate(const Series& f, const Rational& c) {
    Series r(f.order());
    Rational scale(1);
    for (std::size_t k = 0; k <= f.order(); ++k) {
        r[k] = f[k] * scale;
        scale *= c;
    }
    return r;
}

/// (1 + x)^alpha for rational alpha.
inline Series binomial_series(const Rational& alpha, std::size_t order) {
    Series s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = binomial_general(alpha, k);
    return s;
}

enum class ElemFunction { exp, cosh, sinh, sech, asinh, tanh };

inline ElemFunction parse_elem_function(std::string_view name) {
    if (name == "exp") return ElemFunction::exp;
    if (name == "cosh") return ElemFunction::cosh;
    if (name == "sinh") return ElemFunction::sinh;
    if (name == "sech") return ElemFunction::sech;
    if (name == "asinh") return ElemFunction::asinh;
    if (name == "tanh") return ElemFunction::tanh;
    throw std::invalid_argument("elem_series: unknown function '" + std::string(name) + "'");
}

/// Exact MacLaurin series of an elementary function to the given order.
inline Series elem_series(ElemFunction fn, std::size_t order) {
    Series s(order);
    switch (fn) {
        case ElemFunction::exp:
        case ElemFunction::cosh:
        case ElemFunction::sinh:
            for (std::size_t k = 0; k <= order; ++k) {
                bool keep = fn == ElemFunction::exp || (fn == ElemFunction::cosh) == (k % 2 == 0);
                if (keep) s[k] = Rational(Integer(1), factorial(k));
            }
            return s;
        case ElemFunction::sech:
            return ps_reciprocal(elem_series(ElemFunction::cosh, order));
        case ElemFunction::tanh:
            return elem_series(ElemFunction::sinh, order) * elem_series(ElemFunction::sech, order);
        case ElemFunction::asinh: {
            // integrate (1 + x^2)^(-1/2) = sum_j C(-1/2, j) x^(2j)
            if (order == 0) return s;
            Series integrand(order - 1);
            for (std::size_t j = 0; 2 * j <= order - 1; ++j) integrand[2 * j] = binomial_general(Rational(-1, 2), j);
            return ps_integral(integrand);
        }
    }
    throw std::invalid_argument("elem_series: unknown function");
}

inline Series elem_series(std::string_view name, std::size_t order) {
    return elem_series(parse_elem_function(name), order);
}

/// Coefficient of x^k; throws std::out_of_range past the truncation order.
template <CoefficientRing R>
const R& coefficient(const PowerSeries<R>& f, std::size_t k) { return f.coefficient(k); }

/// Default oracle truncation order when coefficients up to index n_max are needed.
constexpr std::size_t oracle_order(std::size_t n_max) { return 2 * n_max + 4; }

}  // namespace cdiff
