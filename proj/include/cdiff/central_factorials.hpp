#pragma once

// Central factorial polynomials x^[n], central factorial numbers of the
// first kind t(n,k) and second kind T(n,k), central and forward differences
// of nothing, and Stirling numbers of the second kind.
//
// Conventions: x^[0] = 1, t(0,0) = T(0,0) = 1, and 0^0 = 1 inside the
// difference sums.

#include "cdiff/polynomial.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/triangle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdiff {

namespace detail {

inline void require_lower(std::size_t n, std::size_t k, const char* what) {
    if (k > n) {
        throw std::out_of_range(std::string(what) + ": index (" + std::to_string(n) + ", " + std::to_string(k) +
                                ") requires k <= n");
    }
}

// i^n for i = 0..limit
inline std::vector<Integer> powers_up_to(std::size_t limit, std::size_t n) {
    std::vector<Integer> p(limit + 1);
    for (std::size_t i = 0; i <= limit; ++i) p[i] = ipow(Integer(static_cast<unsigned long>(i)), n);
    return p;
}

// 2^n * delta^m 0^n = sum_j (-1)^j C(m,j) (m - 2j)^n, given p[i] = i^n for i <= m.
inline Integer scaled_central_nothing(std::size_t m, std::size_t n, const std::vector<Integer>& p) {
    Integer acc = 0;
    Integer binom = 1;
    for (std::size_t j = 0; j <= m; ++j) {
        auto base = static_cast<long>(m) - 2 * static_cast<long>(j);
        Integer term = binom * p[static_cast<std::size_t>(base < 0 ? -base : base)];
        if (base < 0 && n % 2 == 1) term = -term;
        if (j % 2 == 0) acc += term; else acc -= term;
        binom = binom * static_cast<unsigned long>(m - j) / static_cast<unsigned long>(j + 1);
    }
    return acc;
}

// Delta^k 0^n = sum_j (-1)^j C(k,j) (k - j)^n, given p[i] = i^n for i <= k.
inline Integer forward_nothing_sum(std::size_t k, const std::vector<Integer>& p) {
    Integer acc = 0;
    Integer binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
        if (j % 2 == 0) acc += binom * p[k - j]; else acc -= binom * p[k - j];
        binom = binom * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
    }
    return acc;
}

}  // namespace detail

/// x^[n] = x (x + n/2 - 1)(x + n/2 - 2) ... (x + n/2 - (n-1)), expanded.
inline Polynomial central_factorial_polynomial(std::size_t n) {
    if (n == 0) return Polynomial(Rational(1));
    std::vector<Rational> c{Rational(0), Rational(1)};  // x
    const Rational half_n(static_cast<long>(n), 2);
    for (std::size_t j = 1; j < n; ++j) {
        // multiply in place by (x + a)
        const Rational a = half_n - Rational(static_cast<long>(j));
        c.emplace_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + a * c[i];
        c[0] = a * c[0];
    }
    return Polynomial(std::move(c));
}

/// Central factorial number of the first kind: coefficient of x^k in x^[n].
inline Rational t_first(std::size_t n, std::size_t k) {
    detail::require_lower(n, k, "t_first");
    return central_factorial_polynomial(n).coeff(k);
}

/// Central difference of nothing, delta^m 0^n = sum_j (-1)^j C(m,j) (m/2 - j)^n.
/// Zero for opposite parity and for m > n.
inline Rational delta_nothing(std::size_t m, std::size_t n) {
    const auto p = detail::powers_up_to(m, n);
    return Rational(detail::scaled_central_nothing(m, n, p), ipow(Integer(2), n));
}

/// Central factorial number of the second kind, T(n,k) = delta^k 0^n / k!.
inline Rational T_second(std::size_t n, std::size_t k) {
    detail::require_lower(n, k, "T_second");
    return delta_nothing(k, n) / Rational(factorial(k));
}

/// Forward difference of nothing, Delta^k 0^n.
inline Integer forward_nothing(std::size_t k, std::size_t n) {
    return detail::forward_nothing_sum(k, detail::powers_up_to(k, n));
}

/// Stirling number of the second kind, S(n,k) = Delta^k 0^n / k!.
inline Integer stirling2(std::size_t n, std::size_t k) {
    detail::require_lower(n, k, "stirling2");
    Integer q;
    mpz_divexact(q.get_mpz_t(), forward_nothing(k, n).get_mpz_t(), factorial(k).get_mpz_t());
    return q;
}

/// xi^m 0^n = m! t(n, m), with xi = 2 asinh(D/2).
inline Rational xi_nothing(std::size_t m, std::size_t n) {
    detail::require_lower(n, m, "xi_nothing");
    return Rational(factorial(m)) * t_first(n, m);
}

inline Triangle<Rational> t_table(std::size_t n_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Polynomial p = central_factorial_polynomial(n);
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) row[k] = p.coeff(k);
        rows.push_back(std::move(row));
    }
    return {"cfn-first", {{"rows", std::to_string(n_max)}}, std::move(rows)};
}

/// delta^k 0^n for 0 <= k <= n <= n_max.
inline Triangle<Rational> delta_table(std::size_t n_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto p = detail::powers_up_to(n, n);
        const Integer two_n = ipow(Integer(2), n);
        std::vector<Rational> row(n + 1);
        for (std::size_t k = n % 2; k <= n; k += 2) row[k] = Rational(detail::scaled_central_nothing(k, n, p), two_n);
        rows.push_back(std::move(row));
    }
    return {"delta-nothing", {{"rows", std::to_string(n_max)}}, std::move(rows)};
}

inline Triangle<Rational> T_table(const Triangle<Rational>& deltas) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(deltas.rows());
    for (std::size_t n = 0; n < deltas.rows(); ++n) {
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (!deltas(n, k).is_zero()) row[k] = deltas(n, k) / Rational(factorial(k));
        }
        rows.push_back(std::move(row));
    }
    return {"cfn-second", {{"rows", std::to_string(deltas.rows() == 0 ? 0 : deltas.rows() - 1)}}, std::move(rows)};
}

inline Triangle<Rational> T_table(std::size_t n_max) { return T_table(delta_table(n_max)); }

inline Triangle<Integer> stirling2_table(std::size_t n_max) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto p = detail::powers_up_to(n, n);
        std::vector<Integer> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_divexact(row[k].get_mpz_t(), detail::forward_nothing_sum(k, p).get_mpz_t(),
                         factorial(k).get_mpz_t());
        }
        rows.push_back(std::move(row));
    }
    return {"stirling2", {{"rows", std::to_string(n_max)}}, std::move(rows)};
}

/// All four triangles built to the same size.
struct FactorialTriangles {
    Triangle<Rational> t;
    Triangle<Rational> T;
    Triangle<Rational> delta;
    Triangle<Integer> stirling2;

    static FactorialTriangles build(std::size_t n_max) {
        auto deltas = delta_table(n_max);
        auto second = T_table(deltas);
        return {t_table(n_max), std::move(second), std::move(deltas), stirling2_table(n_max)};
    }
};

}  // namespace cdiff
