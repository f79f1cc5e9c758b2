#pragma once

// Euler (secant) numbers by independent routes:
//   kb       Knuth-Buckholtz derivative-polynomial recursion, E_{2n} = E_{2n,0}
//   shov     central differences of nothing, operator 1/(1 + delta^2/2)
//   shov2    central differences of nothing, operator (1 + delta^2/4)^(-1/2)
//   herschel forward differences of nothing, operator (1+Delta)/(1+Delta+Delta^2/2)
//   oracle   (2n)! [x^(2n)] sech x from the power series engine
//
// The signed value follows sech x = sum E_{2n} x^(2n)/(2n)!; the unsigned
// value is the secant number (-1)^n E_{2n}. The difference-operator routes
// evaluate their operator on 0^(2n), which gives the signed value directly.

#include "cdiff/central_factorials.hpp"
#include "cdiff/gcoeff_stern.hpp"
#include "cdiff/power_series.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/triangle.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdiff {

enum class EulerMethod { kb, shov, shov2, herschel, oracle };

inline constexpr std::array<EulerMethod, 5> all_euler_methods{EulerMethod::kb, EulerMethod::shov, EulerMethod::shov2,
                                                              EulerMethod::herschel, EulerMethod::oracle};

inline std::string_view method_name(EulerMethod m) {
    switch (m) {
        case EulerMethod::kb: return "kb";
        case EulerMethod::shov: return "shov";
        case EulerMethod::shov2: return "shov2";
        case EulerMethod::herschel: return "herschel";
        case EulerMethod::oracle: return "oracle";
    }
    return "?";
}

inline EulerMethod parse_euler_method(std::string_view name) {
    for (auto m : all_euler_methods) {
        if (method_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown Euler method '" + std::string(name) + "'");
}

struct EulerValue {
    std::size_t index = 0;  // the even index 2n
    Integer signed_value;
    Integer unsigned_value;
    EulerMethod method = EulerMethod::kb;
};

namespace detail {

inline void require_even(std::size_t index, const char* what) {
    if (index % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(index) + " must be even");
    }
}

inline EulerValue make_euler(std::size_t index, const Rational& signed_value, EulerMethod method) {
    EulerValue v{index, signed_value.to_integer(), {}, method};
    v.unsigned_value = (index / 2) % 2 == 0 ? v.signed_value : Integer(-v.signed_value);
    if (v.unsigned_value <= 0) {
        throw std::logic_error("Euler number " + std::to_string(index) + " via " + std::string(method_name(method)) +
                               " has non-positive secant value " + v.unsigned_value.get_str());
    }
    return v;
}

inline const Rational& delta_at(const Triangle<Rational>& deltas, std::size_t m, std::size_t n) {
    if (n >= deltas.rows()) throw std::out_of_range("delta table too small for index " + std::to_string(n));
    return deltas(n, m);
}

}  // namespace detail

/// Rows 0..index of the derivative-polynomial triangle are swept; only the
/// current row is kept.
inline EulerValue euler_kb(std::size_t index) {
    detail::require_even(index, "euler_kb");
    std::vector<Integer> row{Integer(1)};
    for (std::size_t n = 0; n < index; ++n) {
        // entries with k > index - (n + 1) can no longer reach column 0
        const std::size_t width = std::min(n + 1, index - n - 1) + 1;
        std::vector<Integer> next(width);
        for (std::size_t k = 0; k < width; ++k) {
            if (k >= 1 && k - 1 < row.size()) next[k] = static_cast<unsigned long>(k) * row[k - 1];
            if (k + 1 < row.size()) next[k] += static_cast<unsigned long>(k + 1) * row[k + 1];
        }
        row = std::move(next);
    }
    return detail::make_euler(index, Rational(index / 2 % 2 == 0 ? row[0] : Integer(-row[0])), EulerMethod::kb);
}

/// All E_0, E_2, ..., E_max_index from a single sweep of the recursion.
inline std::vector<EulerValue> euler_kb_sequence(std::size_t max_index) {
    std::vector<EulerValue> out;
    out.reserve(max_index / 2 + 1);
    std::vector<Integer> row{Integer(1)};
    out.push_back(detail::make_euler(0, Rational(1), EulerMethod::kb));
    for (std::size_t n = 0; n + 1 <= max_index; ++n) {
        const std::size_t width = std::min(n + 1, max_index - n - 1) + 1;
        std::vector<Integer> next(width);
        for (std::size_t k = 0; k < width; ++k) {
            if (k >= 1 && k - 1 < row.size()) next[k] = static_cast<unsigned long>(k) * row[k - 1];
            if (k + 1 < row.size()) next[k] += static_cast<unsigned long>(k + 1) * row[k + 1];
        }
        row = std::move(next);
        const std::size_t idx = n + 1;
        if (idx % 2 == 0) {
            out.push_back(detail::make_euler(idx, Rational(idx / 2 % 2 == 0 ? row[0] : Integer(-row[0])),
                                             EulerMethod::kb));
        }
    }
    return out;
}

/// E_{2n} = sum_{k=0}^{n} (-1/2)^k delta^{2k} 0^{2n}.
inline EulerValue euler_shov(std::size_t index, const Triangle<Rational>& deltas) {
    detail::require_even(index, "euler_shov");
    Rational acc;
    Rational weight(1);
    for (std::size_t k = 0; 2 * k <= index; ++k) {
        acc += weight * detail::delta_at(deltas, 2 * k, index);
        weight *= Rational(-1, 2);
    }
    return detail::make_euler(index, acc, EulerMethod::shov);
}

inline EulerValue euler_shov(std::size_t index) { return euler_shov(index, delta_table(index)); }

/// E_{2n} = 2^{2n} sum_{k=0}^{n} C(-1/2, k) delta^{2k} 0^{2n} / 2^{2k}.
inline EulerValue euler_shov2(std::size_t index, const Triangle<Rational>& deltas) {
    detail::require_even(index, "euler_shov2");
    Rational acc;
    for (std::size_t k = 0; 2 * k <= index; ++k) {
        acc += binomial_general(Rational(-1, 2), k) * detail::delta_at(deltas, 2 * k, index) /
               Rational(ipow(Integer(2), 2 * k));
    }
    return detail::make_euler(index, acc * Rational(ipow(Integer(2), index)), EulerMethod::shov2);
}

inline EulerValue euler_shov2(std::size_t index) { return euler_shov2(index, delta_table(index)); }

/// Coefficients of 2/((1+Delta) + (1+Delta)^(-1)) = (1+Delta)/(1+Delta+Delta^2/2)
/// as a series in Delta, truncated at the given degree.
inline Series herschel_operator(std::size_t degree) {
    Series denom(degree);
    Series numer(degree);
    denom[0] = 1;
    numer[0] = 1;
    if (degree >= 1) {
        denom[1] = 1;
        numer[1] = 1;
    }
    if (degree >= 2) denom[2] = Rational(1, 2);
    return numer * ps_reciprocal(denom);
}

/// E_{2n} = sum_k c_k Delta^k 0^{2n}, Delta^k 0^{2n} = k! S(2n, k); the operator
/// series is truncated at Delta^{2n} since higher powers annihilate 0^{2n}.
inline EulerValue euler_herschel(std::size_t index, const Triangle<Integer>& stirling) {
    detail::require_even(index, "euler_herschel");
    if (index >= stirling.rows()) throw std::out_of_range("stirling table too small for index " + std::to_string(index));
    const Series op = herschel_operator(index);
    Rational acc;
    for (std::size_t k = 0; k <= index; ++k) {
        if (op[k].is_zero()) continue;
        acc += op[k] * Rational(Integer(factorial(k) * stirling(index, k)));
    }
    return detail::make_euler(index, acc, EulerMethod::herschel);
}

inline EulerValue euler_herschel(std::size_t index) { return euler_herschel(index, stirling2_table(index)); }

/// (2n)! [x^{2n}] sech x, given a sech series of sufficient order.
inline EulerValue euler_oracle(std::size_t index, const Series& sech) {
    detail::require_even(index, "euler_oracle");
    return detail::make_euler(index, Rational(factorial(index)) * sech.coefficient(index), EulerMethod::oracle);
}

inline EulerValue euler_oracle(std::size_t index) {
    return euler_oracle(index, elem_series(ElemFunction::sech, oracle_order(index)));
}

inline EulerValue euler_value(EulerMethod method, std::size_t index) {
    switch (method) {
        case EulerMethod::kb: return euler_kb(index);
        case EulerMethod::shov: return euler_shov(index);
        case EulerMethod::shov2: return euler_shov2(index);
        case EulerMethod::herschel: return euler_herschel(index);
        case EulerMethod::oracle: return euler_oracle(index);
    }
    throw std::invalid_argument("euler_value: unknown method");
}

/// E_0, E_2, ..., E_max_index by one method, sharing the tables it needs.
inline std::vector<EulerValue> euler_sequence(EulerMethod method, std::size_t max_index) {
    std::vector<EulerValue> out;
    if (method == EulerMethod::kb) return euler_kb_sequence(max_index);
    out.reserve(max_index / 2 + 1);
    switch (method) {
        case EulerMethod::shov:
        case EulerMethod::shov2: {
            const auto deltas = delta_table(max_index);
            for (std::size_t i = 0; i <= max_index; i += 2) {
                out.push_back(method == EulerMethod::shov ? euler_shov(i, deltas) : euler_shov2(i, deltas));
            }
            break;
        }
        case EulerMethod::herschel: {
            const auto stirling = stirling2_table(max_index);
            for (std::size_t i = 0; i <= max_index; i += 2) out.push_back(euler_herschel(i, stirling));
            break;
        }
        case EulerMethod::oracle: {
            const auto sech = elem_series(ElemFunction::sech, oracle_order(max_index));
            for (std::size_t i = 0; i <= max_index; i += 2) out.push_back(euler_oracle(i, sech));
            break;
        }
        case EulerMethod::kb: break;
    }
    return out;
}

/// Signed E_0, E_2, ..., E_max_index (kb route), convenient for formulas that consume them.
inline std::vector<Integer> signed_euler_numbers(std::size_t max_index) {
    std::vector<Integer> out;
    for (const auto& v : euler_kb_sequence(max_index)) out.push_back(v.signed_value);
    return out;
}

}  // namespace cdiff
