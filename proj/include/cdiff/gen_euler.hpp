#pragma once

// Generalized Euler numbers E^(r)_{2n}, sech^r x = sum E^(r)_{2n} x^(2n)/(2n)!,
// for integer order r >= 1.

#include "cdiff/central_factorials.hpp"
#include "cdiff/euler_numbers.hpp"
#include "cdiff/gcoeff_stern.hpp"
#include "cdiff/power_series.hpp"
#include "cdiff/rational.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdiff {

enum class GenEulerMethod { shov3, shov4, reln, oracle };

inline constexpr std::array<GenEulerMethod, 4> all_gen_euler_methods{GenEulerMethod::shov3, GenEulerMethod::shov4,
                                                                     GenEulerMethod::reln, GenEulerMethod::oracle};

inline std::string_view method_name(GenEulerMethod m) {
    switch (m) {
        case GenEulerMethod::shov3: return "shov3";
        case GenEulerMethod::shov4: return "shov4";
        case GenEulerMethod::reln: return "reln";
        case GenEulerMethod::oracle: return "oracle";
    }
    return "?";
}

inline GenEulerMethod parse_gen_euler_method(std::string_view name) {
    for (auto m : all_gen_euler_methods) {
        if (method_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown generalized Euler method '" + std::string(name) + "'");
}

struct GenEulerValue {
    long order = 1;
    std::size_t index = 0;
    Integer value;
    GenEulerMethod method = GenEulerMethod::oracle;
};

namespace detail {

inline void require_order(long r, const char* what) {
    if (r < 1) throw std::invalid_argument(std::string(what) + ": order " + std::to_string(r) + " must be >= 1");
}

inline GenEulerValue make_gen_euler(long r, std::size_t index, const Rational& v, GenEulerMethod m) {
    if (!v.is_integer()) {
        throw std::logic_error("generalized Euler number E^(" + std::to_string(r) + ")_" + std::to_string(index) +
                               " via " + std::string(method_name(m)) + " is not an integer: " + v.str());
    }
    return {r, index, v.num(), m};
}

}  // namespace detail

/// E^(r)_{2n} = sum_k 2^(-k) C(-r, k) delta^{2k} 0^{2n}.
inline GenEulerValue gen_euler_shov3(long r, std::size_t index, const Triangle<Rational>& deltas) {
    detail::require_order(r, "gen_euler_shov3");
    detail::require_even(index, "gen_euler_shov3");
    Rational acc;
    for (std::size_t k = 0; 2 * k <= index; ++k) {
        acc += binomial_general(Rational(-r), k) * detail::delta_at(deltas, 2 * k, index) /
               Rational(ipow(Integer(2), k));
    }
    return detail::make_gen_euler(r, index, acc, GenEulerMethod::shov3);
}

inline GenEulerValue gen_euler_shov3(long r, std::size_t index) {
    return gen_euler_shov3(r, index, delta_table(index));
}

/// E^(r)_{2n} = 2^{2n} sum_k C(-r/2, k) delta^{2k} 0^{2n} / 2^{2k}.
inline GenEulerValue gen_euler_shov4(long r, std::size_t index, const Triangle<Rational>& deltas) {
    detail::require_order(r, "gen_euler_shov4");
    detail::require_even(index, "gen_euler_shov4");
    const Rational alpha(-r, 2);
    Rational acc;
    for (std::size_t k = 0; 2 * k <= index; ++k) {
        acc += binomial_general(alpha, k) * detail::delta_at(deltas, 2 * k, index) /
               Rational(ipow(Integer(2), 2 * k));
    }
    return detail::make_gen_euler(r, index, acc * Rational(ipow(Integer(2), index)), GenEulerMethod::shov4);
}

inline GenEulerValue gen_euler_shov4(long r, std::size_t index) {
    return gen_euler_shov4(r, index, delta_table(index));
}

/// Odd order only: E^(2s+1)_{2nu} = (1/(2s)!) sum_rho (-1)^rho G^s_rho E_{2nu+2rho}.
/// `euler` holds signed E_0, E_2, ... up to at least index + 2s.
inline GenEulerValue gen_euler_reln(long r, std::size_t index, const GTable& g, const std::vector<Integer>& euler) {
    detail::require_order(r, "gen_euler_reln");
    detail::require_even(index, "gen_euler_reln");
    if (r % 2 == 0) throw std::invalid_argument("gen_euler_reln: order " + std::to_string(r) + " is even");
    const auto s = static_cast<std::size_t>((r - 1) / 2);
    if (s >= g.rows()) throw std::out_of_range("gen_euler_reln: G table too small");
    if (index / 2 + s >= euler.size()) throw std::out_of_range("gen_euler_reln: Euler list too short");
    Integer acc = 0;
    for (std::size_t rho = 0; rho <= s; ++rho) {
        Integer term = g(s, rho) * euler[index / 2 + rho];
        if (rho % 2 == 0) acc += term; else acc -= term;
    }
    return detail::make_gen_euler(r, index, Rational(acc, factorial(2 * s)), GenEulerMethod::reln);
}

inline GenEulerValue gen_euler_reln(long r, std::size_t index) {
    detail::require_order(r, "gen_euler_reln");
    if (r % 2 == 0) throw std::invalid_argument("gen_euler_reln: order " + std::to_string(r) + " is even");
    const auto s = static_cast<std::size_t>((r - 1) / 2);
    return gen_euler_reln(r, index, g_table(s), signed_euler_numbers(index + 2 * s));
}

/// (2n)! [x^{2n}] sech^r x, given sech^r to sufficient order.
inline GenEulerValue gen_euler_oracle(long r, std::size_t index, const Series& sech_power) {
    detail::require_order(r, "gen_euler_oracle");
    detail::require_even(index, "gen_euler_oracle");
    return detail::make_gen_euler(r, index, Rational(factorial(index)) * sech_power.coefficient(index),
                                  GenEulerMethod::oracle);
}

inline GenEulerValue gen_euler_oracle(long r, std::size_t index) {
    detail::require_order(r, "gen_euler_oracle");
    return gen_euler_oracle(r, index, ps_pow(elem_series(ElemFunction::sech, oracle_order(index)), r));
}

/// E^(r)_0, E^(r)_2, ..., E^(r)_max_index by one method, sharing tables.
inline std::vector<GenEulerValue> gen_euler_sequence(GenEulerMethod method, long r, std::size_t max_index) {
    detail::require_order(r, "gen_euler_sequence");
    std::vector<GenEulerValue> out;
    out.reserve(max_index / 2 + 1);
    switch (method) {
        case GenEulerMethod::shov3:
        case GenEulerMethod::shov4: {
            const auto deltas = delta_table(max_index);
            for (std::size_t i = 0; i <= max_index; i += 2) {
                out.push_back(method == GenEulerMethod::shov3 ? gen_euler_shov3(r, i, deltas)
                                                              : gen_euler_shov4(r, i, deltas));
            }
            break;
        }
        case GenEulerMethod::reln: {
            if (r % 2 == 0) throw std::invalid_argument("gen_euler_reln: order " + std::to_string(r) + " is even");
            const auto s = static_cast<std::size_t>((r - 1) / 2);
            const auto g = g_table(s);
            const auto euler = signed_euler_numbers(max_index + 2 * s);
            for (std::size_t i = 0; i <= max_index; i += 2) out.push_back(gen_euler_reln(r, i, g, euler));
            break;
        }
        case GenEulerMethod::oracle: {
            const auto power = ps_pow(elem_series(ElemFunction::sech, oracle_order(max_index)), r);
            for (std::size_t i = 0; i <= max_index; i += 2) out.push_back(gen_euler_oracle(r, i, power));
            break;
        }
    }
    return out;
}

}  // namespace cdiff
