#pragma once

// G^r_rho coefficients expressing sech^(2r+1) x through even derivatives of
// sech x, and the derivative-polynomial (Knuth-Buckholtz / Stern) triangle
// E_{n,k} defined by d^n/dz^n sec z = sec z * sum_k E_{n,k} tan^k z.

#include "cdiff/central_factorials.hpp"
#include "cdiff/polynomial.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/triangle.hpp"
#include "cdiff/verification.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdiff {

using GTable = Triangle<Integer>;
using SternTable = Triangle<Integer>;

/// G^r_rho = (2r-1)^2 G^{r-1}_rho + G^{r-1}_{rho-1}, G^0_0 = 1.
inline GTable g_table(std::size_t r_max) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(r_max + 1);
    rows.push_back({Integer(1)});
    for (std::size_t r = 1; r <= r_max; ++r) {
        const auto& prev = rows.back();
        const Integer odd_sq = Integer(static_cast<unsigned long>((2 * r - 1) * (2 * r - 1)));
        std::vector<Integer> row(r + 1);
        for (std::size_t rho = 0; rho <= r; ++rho) {
            if (rho < r) row[rho] = odd_sq * prev[rho];
            if (rho > 0) row[rho] += prev[rho - 1];
        }
        rows.push_back(std::move(row));
    }
    return {"gcoeff", {{"rows", std::to_string(r_max)}}, std::move(rows)};
}

/// prod_{j=1}^{r} (x^2 - (2j-1)^2); its x^(2 rho) coefficient is (-1)^(r-rho) G^r_rho.
inline Polynomial g_row_polynomial(std::size_t r) {
    Polynomial p(Rational(1));
    for (std::size_t j = 1; j <= r; ++j) {
        const auto odd = static_cast<long>(2 * j - 1);
        p *= Polynomial({Rational(-odd * odd), Rational(0), Rational(1)});
    }
    return p;
}

/// E_{n+1,k} = k E_{n,k-1} + (k+1) E_{n,k+1}, E_{0,k} = delta_{0,k}.
inline SternTable stern_table(std::size_t n_max) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Integer(1)});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(n + 2);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            if (k >= 1) row[k] = static_cast<unsigned long>(k) * prev[k - 1];
            if (k + 1 <= n) row[k] += static_cast<unsigned long>(k + 1) * prev[k + 1];
        }
        rows.push_back(std::move(row));
    }
    return {"stern", {{"rows", std::to_string(n_max)}}, std::move(rows)};
}

/// Stern's a^(m)_k read from the triangle: E_{m,2k} for even m, E_{m,2k+1} for odd m.
/// Zero past the end of the row.
inline Integer stern_a(const SternTable& table, std::size_t m, std::size_t k) {
    const std::size_t col = (m % 2 == 0) ? 2 * k : 2 * k + 1;
    if (col > m) return 0;
    return table.at(m, col);
}

/// a^(m)_k for m = 0..m_max built from Stern's coupled recursion
///   a^(2n+1)_k = (2k+1) a^(2n)_k + (2k+2) a^(2n)_{k+1}
///   a^(2n+2)_k = 2k a^(2n+1)_{k-1} + (2k+1) a^(2n+1)_k
/// with a^(0)_0 = 1. Row m has floor(m/2) + 1 entries.
inline std::vector<std::vector<Integer>> stern_coupled(std::size_t m_max) {
    std::vector<std::vector<Integer>> a;
    a.reserve(m_max + 1);
    a.push_back({Integer(1)});
    auto get = [](const std::vector<Integer>& row, std::ptrdiff_t k) -> Integer {
        if (k < 0 || static_cast<std::size_t>(k) >= row.size()) return 0;
        return row[static_cast<std::size_t>(k)];
    };
    for (std::size_t m = 1; m <= m_max; ++m) {
        const auto& prev = a.back();
        std::vector<Integer> row(m / 2 + 1);
        for (std::size_t k = 0; k < row.size(); ++k) {
            const auto kk = static_cast<std::ptrdiff_t>(k);
            const auto ku = static_cast<unsigned long>(k);
            if (m % 2 == 1) {
                row[k] = (2 * ku + 1) * get(prev, kk) + (2 * ku + 2) * get(prev, kk + 1);
            } else {
                row[k] = (2 * ku) * get(prev, kk - 1) + (2 * ku + 1) * get(prev, kk);
            }
        }
        a.push_back(std::move(row));
    }
    return a;
}

/// G^r_rho == (-1)^(r-rho) 2^(2r-2rho) t(2r+1, 2rho+1) for 0 <= rho <= r <= r_max.
///
/// The t side is the coefficient list of x^[2r+1] from the product form; the
/// G side comes from the recursion, so the two constructions are independent.
inline VerificationReport g_from_t_crosscheck(std::size_t r_max) {
    ReportBuilder rb("gcoeff-t", "0 <= rho <= r <= " + std::to_string(r_max));
    const GTable g = g_table(r_max);
    for (std::size_t r = 0; r <= r_max && !rb.failed(); ++r) {
        const Polynomial cf = central_factorial_polynomial(2 * r + 1);
        for (std::size_t rho = 0; rho <= r; ++rho) {
            Rational rhs = Rational(ipow(Integer(2), 2 * (r - rho))) * cf.coeff(2 * rho + 1);
            if ((r - rho) % 2 == 1) rhs = -rhs;
            if (!rb.check(Rational(g(r, rho)), rhs, [&] {
                    return "r=" + std::to_string(r) + ", rho=" + std::to_string(rho);
                })) {
                break;
            }
        }
    }
    return rb.report();
}

}  // namespace cdiff
