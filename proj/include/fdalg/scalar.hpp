// Shared interface of the two exact scalar backends (Rat, RatFunc).

#pragma once

#include "fdalg/ratfunc.hpp"
#include "fdalg/rational.hpp"

#include <concepts>
#include <string>

namespace fdalg {

template <class F>
concept ScalarField = requires(F a, const F& b, const std::string& s) {
    { F() };
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::parse(s) } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a == b } -> std::same_as<bool>;
    { b.is_zero() } -> std::same_as<bool>;
    { b.str() } -> std::same_as<std::string>;
};

template <class F> struct scalar_traits;

template <> struct scalar_traits<Rat> {
    static constexpr const char* kind = "rational";
};
template <> struct scalar_traits<RatFunc> {
    static constexpr const char* kind = "ratfunc";
};

template <ScalarField F>
F field_pow(const F& base, long e) {
    if (e < 0) return F::one() / field_pow(base, -e);
    F acc = F::one();
    F b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * b;
        b = b * b;
    }
    return acc;
}

/// The Liu-Schulz parameter must avoid roots of unity; over the rationals
/// those are exactly {1, -1}, and q = 0 is excluded outright.
inline bool admissible_parameter(const Rat& q) {
    return !(q == Rat(0) || q == Rat(1) || q == Rat(-1));
}
inline bool admissible_parameter(const RatFunc& q) {
    if (!q.is_constant()) return true;
    Rat c = q.constant_value();
    return admissible_parameter(c);
}

} // namespace fdalg
