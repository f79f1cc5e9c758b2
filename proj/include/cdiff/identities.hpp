#pragma once

// Exact, finite-sweep verification of the identities tying together the
// central factorial numbers, the Euler numbers and their generating
// functions. Every check compares exact rationals; a failure records the
// first counterexample with both sides.

#include "cdiff/central_factorials.hpp"
#include "cdiff/euler_numbers.hpp"
#include "cdiff/gcoeff_stern.hpp"
#include "cdiff/gen_euler.hpp"
#include "cdiff/polynomial.hpp"
#include "cdiff/power_series.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/verification.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdiff {

namespace detail {

inline std::string num(std::size_t v) { return std::to_string(v); }
inline std::string num(long v) { return std::to_string(v); }

inline void require_at_least(std::size_t v, std::size_t lo, const char* what) {
    if (v < lo) throw std::invalid_argument(std::string(what) + ": parameter must be >= " + std::to_string(lo));
}

}  // namespace detail

/// f(D) 0^[n] = sum_k f_k k! t(n, k): a power series in D acting on the
/// central factorial x^[n] at x = 0.
inline Rational apply_to_central_factorial(const Series& f, std::size_t n, const Triangle<Rational>& t) {
    if (f.order() < n) throw std::invalid_argument("apply_to_central_factorial: series order below n");
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
        if (f[k].is_zero() || t(n, k).is_zero()) continue;
        acc += f[k] * Rational(factorial(k)) * t(n, k);
    }
    return acc;
}

/// sum_{n=1}^{s} E_{2n}/((2n)! 2^{2n}) D^{2n} 0^[2s] = D 0^[2s+1] = (-1)^s ((2s-1)!!/2^s)^2,
/// also compared against (2s)!/2^{2s} C(-1/2, s).
inline VerificationReport verify_SR(std::size_t s_max) {
    detail::require_at_least(s_max, 1, "verify_SR");
    ReportBuilder rb("SR", "1 <= s <= " + detail::num(s_max));
    const auto t = t_table(2 * s_max + 1);
    const auto euler = signed_euler_numbers(2 * s_max);
    for (std::size_t s = 1; s <= s_max; ++s) {
        Rational lhs;
        for (std::size_t n = 1; n <= s; ++n) {
            // D^{2n} 0^[2s] = (2n)! t(2s, 2n); the (2n)! cancels
            lhs += Rational(euler[n], ipow(Integer(2), 2 * n)) * t(2 * s, 2 * n);
        }
        const Rational middle = t(2 * s + 1, 1);
        Rational closed = pow(Rational(double_factorial(2 * s - 1), ipow(Integer(2), s)), 2);
        if (s % 2 == 1) closed = -closed;
        const Rational binom_form =
            Rational(factorial(2 * s), ipow(Integer(2), 2 * s)) * binomial_general(Rational(-1, 2), s);
        auto params = [&] { return "s=" + detail::num(s); };
        if (!rb.check(lhs, middle, params) || !rb.check(middle, closed, params) ||
            !rb.check(closed, binom_form, params)) {
            break;
        }
    }
    return rb.report();
}

/// sum_{k=1}^{nu+1} t(2nu+2, 2k) / 2^{2k-2} = (2nu)!/2^{2nu} C(-3/2, nu).
inline VerificationReport verify_SR1(std::size_t nu_max) {
    ReportBuilder rb("SR1", "0 <= nu <= " + detail::num(nu_max));
    const auto t = t_table(2 * nu_max + 2);
    for (std::size_t nu = 0; nu <= nu_max; ++nu) {
        Rational lhs;
        for (std::size_t k = 1; k <= nu + 1; ++k) lhs += t(2 * nu + 2, 2 * k) / Rational(ipow(Integer(2), 2 * k - 2));
        const Rational rhs =
            Rational(factorial(2 * nu), ipow(Integer(2), 2 * nu)) * binomial_general(Rational(-3, 2), nu);
        if (!rb.check(lhs, rhs, [&] { return "nu=" + detail::num(nu); })) break;
    }
    return rb.report();
}

/// (4/3) sum_{k=0}^{nu+1} t(2nu+3, 2k+1) = (2nu)!/2^{2nu} C(-5/2, nu).
inline VerificationReport verify_SR2(std::size_t nu_max) {
    ReportBuilder rb("SR2", "0 <= nu <= " + detail::num(nu_max));
    const auto t = t_table(2 * nu_max + 3);
    for (std::size_t nu = 0; nu <= nu_max; ++nu) {
        Rational sum;
        for (std::size_t k = 0; k <= nu + 1; ++k) sum += t(2 * nu + 3, 2 * k + 1);
        const Rational lhs = Rational(4, 3) * sum;
        const Rational rhs =
            Rational(factorial(2 * nu), ipow(Integer(2), 2 * nu)) * binomial_general(Rational(-5, 2), nu);
        if (!rb.check(lhs, rhs, [&] { return "nu=" + detail::num(nu); })) break;
    }
    return rb.report();
}

/// T t = t T = I as lower-triangular matrices of size (N+1).
inline VerificationReport verify_orthogonality(std::size_t n_max) {
    ReportBuilder rb("orthogonality", "0 <= m <= n <= " + detail::num(n_max));
    const auto t = t_table(n_max);
    const auto T = T_table(n_max);
    for (std::size_t n = 0; n <= n_max && !rb.failed(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            Rational tT, Tt;
            for (std::size_t k = m; k <= n; ++k) {
                Tt += T(n, k) * t(k, m);
                tT += t(n, k) * T(k, m);
            }
            const Rational kron(n == m ? 1 : 0);
            auto params = [&] { return "n=" + detail::num(n) + ", m=" + detail::num(m); };
            if (!rb.check(Tt, kron, [&] { return "T*t " + params(); }) ||
                !rb.check(tT, kron, [&] { return "t*T " + params(); })) {
                break;
            }
        }
    }
    return rb.report();
}

/// sum_{rho=s}^{r} G^r_rho a^(2rho)_s = (2r)! C(r,s) and
/// sum_{rho=s}^{r} G^r_rho a^(2rho+1)_s = (2r+1)! C(r,s).
inline VerificationReport verify_stern_crossids(std::size_t r_max) {
    ReportBuilder rb("stern", "0 <= s <= r <= " + detail::num(r_max));
    const auto g = g_table(r_max);
    const auto e = stern_table(2 * r_max + 1);
    for (std::size_t r = 0; r <= r_max && !rb.failed(); ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
            Integer even = 0;
            Integer odd = 0;
            for (std::size_t rho = s; rho <= r; ++rho) {
                even += g(r, rho) * stern_a(e, 2 * rho, s);
                odd += g(r, rho) * stern_a(e, 2 * rho + 1, s);
            }
            const Integer binom = binomial(r, s);
            auto params = [&] { return "r=" + detail::num(r) + ", s=" + detail::num(s); };
            if (!rb.check(even, Integer(factorial(2 * r) * binom), [&] { return "even " + params(); }) ||
                !rb.check(odd, Integer(factorial(2 * r + 1) * binom), [&] { return "odd " + params(); })) {
                break;
            }
        }
    }
    return rb.report();
}

/// Seeded random polynomial with small rational coefficients.
inline Series random_rational_polynomial(std::size_t degree, std::size_t order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Series p(std::max(degree, order));
    for (std::size_t k = 0; k <= degree; ++k) p[k] = Rational(num(rng), den(rng));
    return order >= degree ? p : p.truncated(order);
}

inline constexpr std::uint64_t default_seed = 0x5eed'c0ffee'2024ULL;

/// Central-difference operator identity: f(D) 0^[n] = (df/d delta) 0^[n-1] with
/// df/d delta = f'(D) sech(D/2), over a fixed family of test series and a
/// seeded random polynomial, plus the chains
///   sech(D/2) 0^[2nu] = D 0^[2nu+1]
///   sech^3(D/2) 0^[2nu] = 2 tanh(D/2) 0^[2nu+1] = 4 cosh(D/2) 0^[2nu+2]
///   sech^5(D/2) 0^[2nu] = (4/3) sinh(D) 0^[2nu+3]
inline VerificationReport verify_jeffery_D(std::size_t n_max, std::uint64_t seed = default_seed) {
    detail::require_at_least(n_max, 1, "verify_jeffery_D");
    ReportBuilder rb("jeffery-D", "1 <= n <= " + detail::num(n_max) + ", 0 <= 2nu <= " + detail::num(n_max));
    const std::size_t order = n_max + 3;
    const auto t = t_table(order);
    const Series half_sech = ps_dilate(elem_series(ElemFunction::sech, order), Rational(1, 2));

    struct Named {
        std::string name;
        Series f;
    };
    const std::vector<Named> family{
        {"exp", elem_series(ElemFunction::exp, order)},
        {"cosh", elem_series(ElemFunction::cosh, order)},
        {"sinh", elem_series(ElemFunction::sinh, order)},
        {"sech", elem_series(ElemFunction::sech, order)},
        {"random-poly", random_rational_polynomial(n_max, order, seed)},
    };
    for (const auto& [name, f] : family) {
        const Series g = ps_derivative(f).truncated(order - 1) * half_sech.truncated(order - 1);
        for (std::size_t n = 1; n <= n_max; ++n) {
            const Rational lhs = apply_to_central_factorial(f, n, t);
            const Rational rhs = apply_to_central_factorial(g, n - 1, t);
            if (!rb.check(lhs, rhs, [&] { return "f=" + name + ", n=" + detail::num(n); })) return rb.report();
        }
    }

    const Series s1 = half_sech;
    const Series s3 = ps_pow(half_sech, 3);
    const Series s5 = ps_pow(half_sech, 5);
    const Series D = Series::identity(order);
    const Series two_tanh = Rational(2) * ps_dilate(elem_series(ElemFunction::tanh, order), Rational(1, 2));
    const Series four_cosh = Rational(4) * ps_dilate(elem_series(ElemFunction::cosh, order), Rational(1, 2));
    const Series sinh_43 = Rational(4, 3) * elem_series(ElemFunction::sinh, order);
    for (std::size_t nu = 0; 2 * nu <= n_max; ++nu) {
        const std::size_t n = 2 * nu;
        auto params = [&](const char* chain) { return std::string(chain) + ", nu=" + detail::num(nu); };
        const Rational a3 = apply_to_central_factorial(s3, n, t);
        const Rational a5 = apply_to_central_factorial(s5, n, t);
        if (!rb.check(apply_to_central_factorial(s1, n, t), apply_to_central_factorial(D, n + 1, t),
                      [&] { return params("sech-chain"); }) ||
            !rb.check(a3, apply_to_central_factorial(two_tanh, n + 1, t), [&] { return params("sech3-tanh"); }) ||
            !rb.check(a3, apply_to_central_factorial(four_cosh, n + 2, t), [&] { return params("sech3-cosh"); }) ||
            !rb.check(a5, apply_to_central_factorial(sinh_43, n + 3, t), [&] { return params("sech5-sinh"); })) {
            break;
        }
    }
    return rb.report();
}

/// sech^(2r+1) x = ((+-1)^(r+1) / (r (2r-1)!!)) (d/d sinh x)^(r+1) e^(+-r x),
/// with d/d(sinh x) realized by rewriting in u = sinh x (composition with
/// asinh), differentiating in u, and substituting u = sinh x back.
inline VerificationReport verify_ident3(std::size_t r_max, std::size_t order) {
    detail::require_at_least(r_max, 1, "verify_ident3");
    ReportBuilder rb("ident3", "1 <= r <= " + detail::num(r_max) + ", both branches, order " + detail::num(order));
    const Series sech = elem_series(ElemFunction::sech, order);
    const Series sinh = elem_series(ElemFunction::sinh, order);
    for (std::size_t r = 1; r <= r_max; ++r) {
        const std::size_t work = order + r + 1;
        const Series asinh = elem_series(ElemFunction::asinh, work);
        const Series exp = elem_series(ElemFunction::exp, work);
        const Series lhs = ps_pow(sech, static_cast<long>(2 * r + 1));
        for (int branch : {1, -1}) {
            Series h = ps_compose(exp, Rational(branch * static_cast<long>(r)) * asinh);
            for (std::size_t d = 0; d <= r; ++d) h = ps_derivative(h);
            Rational scale = Rational(Integer(1), Integer(static_cast<unsigned long>(r) * double_factorial(2 * r - 1)));
            if (branch < 0 && (r + 1) % 2 == 1) scale = -scale;
            const Series rhs = scale * ps_compose(h, sinh);
            for (std::size_t k = 0; k <= order; ++k) {
                if (!rb.check(lhs[k], rhs[k], [&] {
                        return "r=" + detail::num(r) + ", branch=" + (branch > 0 ? "+" : "-") + ", x^" +
                               detail::num(k);
                    })) {
                    return rb.report();
                }
            }
        }
    }
    return rb.report();
}

/// e^(r x) = sum_s 2^s (r/2)^[s] / s! sinh^s x.
inline VerificationReport verify_lonexp(const std::vector<long>& r_set, std::size_t order) {
    std::string range = "r in {";
    for (std::size_t i = 0; i < r_set.size(); ++i) range += (i ? "," : "") + detail::num(r_set[i]);
    ReportBuilder rb("lonexp", range + "}, order " + detail::num(order));
    const Series exp = elem_series(ElemFunction::exp, order);
    const Series sinh = elem_series(ElemFunction::sinh, order);
    std::vector<Polynomial> cf;
    for (std::size_t s = 0; s <= order; ++s) cf.push_back(central_factorial_polynomial(s));
    for (long r : r_set) {
        const Rational half_r(r, 2);
        Series outer(order);
        for (std::size_t s = 0; s <= order; ++s) {
            outer[s] = Rational(ipow(Integer(2), s), factorial(s)) * cf[s](half_r);
        }
        const Series lhs = ps_dilate(exp, Rational(r));
        const Series rhs = ps_compose(outer, sinh);
        for (std::size_t k = 0; k <= order; ++k) {
            if (!rb.check(lhs[k], rhs[k], [&] { return "r=" + detail::num(r) + ", x^" + detail::num(k); })) {
                return rb.report();
            }
        }
    }
    return rb.report();
}

/// Bivariate generating functions, compared coefficientwise in x and y:
///   sum_n t_n(x) y^n/n! = exp(2x asinh(y/2))
///   sum_n T_n(x) y^n/n! = exp(2x sinh(y/2))
/// plus the polynomial reciprocity sum_k T(n,k) t_k(x) = x^n and
/// sum_k t(n,k) T_k(x) = x^n for n <= x_degree.
inline VerificationReport verify_genfuncs(std::size_t x_degree, std::size_t y_order) {
    detail::require_at_least(x_degree, 1, "verify_genfuncs");
    detail::require_at_least(y_order, 1, "verify_genfuncs");
    ReportBuilder rb("genfuncs", "x-degree <= " + detail::num(x_degree) + ", y-order <= " + detail::num(y_order));
    const std::size_t n_max = std::max(x_degree, y_order);
    const auto t = t_table(n_max);
    const auto T = T_table(n_max);
    const Series exp = elem_series(ElemFunction::exp, y_order);

    auto two_x_times = [&](const Series& inner) {
        PolySeries s(y_order);
        for (std::size_t k = 0; k <= y_order; ++k) s[k] = Polynomial::monomial(1, Rational(2) * inner[k]);
        return s;
    };
    const PolySeries gen_t =
        ps_compose(exp, two_x_times(ps_dilate(elem_series(ElemFunction::asinh, y_order), Rational(1, 2))));
    const PolySeries gen_T =
        ps_compose(exp, two_x_times(ps_dilate(elem_series(ElemFunction::sinh, y_order), Rational(1, 2))));

    for (std::size_t n = 0; n <= y_order; ++n) {
        const Rational inv_fact(Integer(1), factorial(n));
        for (std::size_t m = 0; m <= x_degree; ++m) {
            const Rational want_t = m <= n ? inv_fact * t(n, m) : Rational(0);
            const Rational want_T = m <= n ? inv_fact * T(n, m) : Rational(0);
            auto params = [&](const char* fam) {
                return std::string(fam) + ", y^" + detail::num(n) + " x^" + detail::num(m);
            };
            if (!rb.check(gen_t[n].coeff(m), want_t, [&] { return params("t"); }) ||
                !rb.check(gen_T[n].coeff(m), want_T, [&] { return params("T"); })) {
                return rb.report();
            }
        }
    }

    std::vector<Polynomial> t_poly, T_poly;
    for (std::size_t k = 0; k <= x_degree; ++k) {
        t_poly.push_back(central_factorial_polynomial(k));
        std::vector<Rational> cs(k + 1);
        for (std::size_t j = 0; j <= k; ++j) cs[j] = T(k, j);
        T_poly.emplace_back(std::move(cs));
    }
    for (std::size_t n = 0; n <= x_degree; ++n) {
        Polynomial T_of_t, t_of_T;
        for (std::size_t k = 0; k <= n; ++k) {
            T_of_t += T(n, k) * t_poly[k];
            t_of_T += t(n, k) * T_poly[k];
        }
        const Polynomial xn = Polynomial::monomial(n);
        if (!rb.check(T_of_t, xn, [&] { return "T(t(x)) n=" + detail::num(n); }) ||
            !rb.check(t_of_T, xn, [&] { return "t(T(x)) n=" + detail::num(n); })) {
            break;
        }
    }
    return rb.report();
}

/// delta^n u = sum_m (delta^n 0^m / m!) D^m u and
/// D^m u = sum_n (xi^m 0^n / n!) delta^n u, for u = x^p, p <= n_max, with
/// delta^n u(x) = sum_j (-1)^j C(n,j) u(x + n/2 - j).
inline VerificationReport verify_newton_expansions(std::size_t n_max) {
    detail::require_at_least(n_max, 1, "verify_newton_expansions");
    ReportBuilder rb("newton", "0 <= n, m <= p <= " + detail::num(n_max));
    const auto t = t_table(n_max);
    const auto deltas = delta_table(n_max);

    auto central_diff = [](std::size_t n, std::size_t p) {
        const Polynomial u = Polynomial::monomial(p);
        Polynomial acc;
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational shift = Rational(static_cast<long>(n), 2) - Rational(static_cast<long>(j));
            Polynomial term = Rational(binomial(n, j)) * u.shifted(shift);
            if (j % 2 == 0) acc += term; else acc -= term;
        }
        return acc;
    };
    auto derivative = [](std::size_t m, std::size_t p) {
        if (m > p) return Polynomial();
        return Polynomial::monomial(p - m, Rational(Integer(factorial(p) / factorial(p - m))));
    };

    for (std::size_t p = 0; p <= n_max; ++p) {
        std::vector<Polynomial> diffs;
        for (std::size_t n = 0; n <= p; ++n) diffs.push_back(central_diff(n, p));
        for (std::size_t n = 0; n <= p; ++n) {
            Polynomial rhs;
            for (std::size_t m = n; m <= p; ++m) {
                rhs += (deltas(m, n) / Rational(factorial(m))) * derivative(m, p);
            }
            if (!rb.check(diffs[n], rhs, [&] { return "delta^n x^p, n=" + detail::num(n) + ", p=" + detail::num(p); })) {
                return rb.report();
            }
        }
        for (std::size_t m = 0; m <= p; ++m) {
            Polynomial rhs;
            for (std::size_t n = m; n <= p; ++n) {
                rhs += (Rational(factorial(m)) * t(n, m) / Rational(factorial(n))) * diffs[n];
            }
            if (!rb.check(derivative(m, p), rhs, [&] { return "D^m x^p, m=" + detail::num(m) + ", p=" + detail::num(p); })) {
                return rb.report();
            }
        }
    }
    return rb.report();
}

/// 2 asinh(asinh(x/2)) against the double sum: coefficient of x^(2k+1) is
/// (1/(2k+1)!) sum_j C(-1/2, j)/(2^{2j}(2j+1)) (2j+1)! t(2k+1, 2j+1); even
/// coefficients vanish.
inline VerificationReport verify_nested_asinh(std::size_t order) {
    detail::require_at_least(order, 1, "verify_nested_asinh");
    ReportBuilder rb("nested-asinh", "order " + detail::num(order));
    const Series asinh = elem_series(ElemFunction::asinh, order);
    const Series series = Rational(2) * ps_compose(asinh, ps_dilate(asinh, Rational(1, 2)));
    const auto t = t_table(order);
    for (std::size_t r = 0; r <= order; ++r) {
        Rational expected;
        if (r % 2 == 1) {
            for (std::size_t j = 0; 2 * j + 1 <= r; ++j) {
                const Rational xi_one = binomial_general(Rational(-1, 2), j) /
                                        Rational(Integer(ipow(Integer(2), 2 * j) * static_cast<unsigned long>(2 * j + 1)));
                expected += xi_one * Rational(factorial(2 * j + 1)) * t(r, 2 * j + 1);
            }
            expected /= Rational(factorial(r));
        }
        if (!rb.check(series[r], expected, [&] { return "x^" + detail::num(r); })) break;
    }
    return rb.report();
}

/// 4 cosh^2(x/2) = 4 + (2 sinh(x/2))^2 coefficientwise.
inline VerificationReport verify_mean(std::size_t order) {
    ReportBuilder rb("mean", "order " + detail::num(order));
    const Series c = ps_dilate(elem_series(ElemFunction::cosh, order), Rational(1, 2));
    const Series s = Rational(2) * ps_dilate(elem_series(ElemFunction::sinh, order), Rational(1, 2));
    const Series lhs = Rational(4) * (c * c);
    const Series rhs = Series::constant(Rational(4), order) + s * s;
    for (std::size_t k = 0; k <= order; ++k) {
        if (!rb.check(lhs[k], rhs[k], [&] { return "x^" + detail::num(k); })) break;
    }
    return rb.report();
}

/// [x^n] (2 asinh(x/2))^m = m! t(n,m)/n! and [x^n] (2 sinh(x/2))^m = m! T(n,m)/n!.
inline VerificationReport verify_invsh(std::size_t n_max) {
    ReportBuilder rb("invsh", "0 <= m <= n <= " + detail::num(n_max));
    const auto t = t_table(n_max);
    const auto T = T_table(n_max);
    const Series xi = Rational(2) * ps_dilate(elem_series(ElemFunction::asinh, n_max), Rational(1, 2));
    const Series delta = Rational(2) * ps_dilate(elem_series(ElemFunction::sinh, n_max), Rational(1, 2));
    Series xi_pow = Series::one(n_max);
    Series delta_pow = Series::one(n_max);
    for (std::size_t m = 0; m <= n_max; ++m) {
        for (std::size_t n = m; n <= n_max; ++n) {
            const Rational scale = Rational(factorial(m), factorial(n));
            auto params = [&](const char* which) {
                return std::string(which) + ", m=" + detail::num(m) + ", n=" + detail::num(n);
            };
            if (!rb.check(xi_pow[n], scale * t(n, m), [&] { return params("asinh"); }) ||
                !rb.check(delta_pow[n], scale * T(n, m), [&] { return params("sinh"); })) {
                return rb.report();
            }
        }
        xi_pow = xi_pow * xi;
        delta_pow = delta_pow * delta;
    }
    return rb.report();
}

/// All five Euler routes agree exactly for 0 <= 2n <= max_index.
inline VerificationReport verify_euler_agreement(std::size_t max_index) {
    ReportBuilder rb("euler", "0 <= 2n <= " + detail::num(max_index));
    const auto reference = euler_sequence(EulerMethod::oracle, max_index);
    for (auto method : all_euler_methods) {
        if (method == EulerMethod::oracle) continue;
        const auto values = euler_sequence(method, max_index);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!rb.check(values[i].signed_value, reference[i].signed_value, [&] {
                    return std::string(method_name(method)) + " vs oracle, 2n=" + detail::num(values[i].index);
                })) {
                return rb.report();
            }
        }
    }
    return rb.report();
}

/// shov3 == shov4 == oracle for 1 <= r <= r_max, and == reln for odd r.
inline VerificationReport verify_gen_euler_agreement(long r_max, std::size_t max_index) {
    ReportBuilder rb("gen-euler", "1 <= r <= " + detail::num(r_max) + ", 0 <= 2n <= " + detail::num(max_index));
    const auto deltas = delta_table(max_index);
    const auto g = g_table(static_cast<std::size_t>(std::max(0L, (r_max - 1) / 2)));
    const auto euler = signed_euler_numbers(max_index + static_cast<std::size_t>(std::max(0L, r_max - 1)));
    const Series sech = elem_series(ElemFunction::sech, oracle_order(max_index));
    Series power = Series::one(sech.order());
    for (long r = 1; r <= r_max; ++r) {
        power = power * sech;
        for (std::size_t i = 0; i <= max_index; i += 2) {
            const Integer want = gen_euler_oracle(r, i, power).value;
            auto params = [&](const char* m) {
                return std::string(m) + " vs oracle, r=" + detail::num(r) + ", 2n=" + detail::num(i);
            };
            if (!rb.check(gen_euler_shov3(r, i, deltas).value, want, [&] { return params("shov3"); }) ||
                !rb.check(gen_euler_shov4(r, i, deltas).value, want, [&] { return params("shov4"); }) ||
                (r % 2 == 1 && !rb.check(gen_euler_reln(r, i, g, euler).value, want, [&] { return params("reln"); }))) {
                return rb.report();
            }
        }
    }
    return rb.report();
}

/// One named check runnable from the command line; `max` is the single size
/// knob and each suite maps it onto its own parameters.
struct SuiteInfo {
    std::string id;
    std::string description;
    std::function<VerificationReport(std::size_t max)> run;
};

inline const std::vector<SuiteInfo>& identity_suites() {
    static const std::vector<SuiteInfo> suites{
        {"SR", "Euler sum rule, 1 <= s <= max", [](std::size_t m) { return verify_SR(std::max<std::size_t>(m, 1)); }},
        {"SR1", "even sum rule, 0 <= nu <= max", [](std::size_t m) { return verify_SR1(m); }},
        {"SR2", "odd sum rule, 0 <= nu <= max", [](std::size_t m) { return verify_SR2(m); }},
        {"orthogonality", "t/T mutually inverse, size max", [](std::size_t m) { return verify_orthogonality(m); }},
        {"gcoeff-t", "G table against t(2r+1, 2rho+1), r <= max", [](std::size_t m) { return g_from_t_crosscheck(m); }},
        {"stern", "G / Stern cross-identities, r <= max", [](std::size_t m) { return verify_stern_crossids(m); }},
        {"jeffery-D", "D-operator identity and its sech chains, n <= max",
         [](std::size_t m) { return verify_jeffery_D(std::max<std::size_t>(m, 1)); }},
        {"ident3", "sech^(2r+1) as sinh-derivatives, r <= max/5, order max",
         [](std::size_t m) { return verify_ident3(std::max<std::size_t>(m / 5, 1), m); }},
        {"lonexp", "e^(rx) in powers of sinh x, -3 <= r <= 3, order max",
         [](std::size_t m) { return verify_lonexp({-3, -2, -1, 0, 1, 2, 3}, m); }},
        {"genfuncs", "bivariate generating functions, degree/order max",
         [](std::size_t m) { return verify_genfuncs(std::max<std::size_t>(m, 1), std::max<std::size_t>(m, 1)); }},
        {"newton", "Newton-type expansions on x^p, p <= max",
         [](std::size_t m) { return verify_newton_expansions(std::max<std::size_t>(m, 1)); }},
        {"nested-asinh", "2 asinh(asinh(x/2)), order max",
         [](std::size_t m) { return verify_nested_asinh(std::max<std::size_t>(m, 1)); }},
        {"mean", "4 cosh^2(x/2) = 4 + (2 sinh(x/2))^2, order max", [](std::size_t m) { return verify_mean(m); }},
        {"invsh", "powers of 2 asinh(x/2) and 2 sinh(x/2), n <= max", [](std::size_t m) { return verify_invsh(m); }},
        {"euler", "five Euler routes agree, 2n <= 2 max", [](std::size_t m) { return verify_euler_agreement(2 * m); }},
        {"gen-euler", "generalized Euler routes agree, r <= max/4, 2n <= 2 max",
         [](std::size_t m) {
             return verify_gen_euler_agreement(std::max<long>(static_cast<long>(m / 4), 1), 2 * m);
         }},
    };
    return suites;
}

/// Looks up a suite by id; throws std::invalid_argument for unknown ids.
inline const SuiteInfo& find_suite(const std::string& id) {
    for (const auto& s : identity_suites()) {
        if (s.id == id) return s;
    }
    throw std::invalid_argument("unknown identity suite '" + id + "'");
}

}  // namespace cdiff
