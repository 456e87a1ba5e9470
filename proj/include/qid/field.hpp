#ifndef QID_FIELD_HPP
#define QID_FIELD_HPP

#include <concepts>

#include "qid/rational.hpp"

namespace qid {

/// Exact field arithmetic: + - * /, equality, and an embedding of the
/// rationals. Division by zero throws `DivisionByZero`, it never returns a
/// value.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, Rational> &&
    requires(const F a, const F b) {
        { a + b } -> std::convertible_to<F>;
        { a - b } -> std::convertible_to<F>;
        { a * b } -> std::convertible_to<F>;
        { a / b } -> std::convertible_to<F>;
        { -a } -> std::convertible_to<F>;
        { a.is_zero() } -> std::convertible_to<bool>;
    };

/// x^e by repeated squaring; negative exponents invert.
template <Field F>
F power(const F& x, long e) {
    if (e < 0) return F(Rational(1)) / power(x, -e);
    F result(Rational(1));
    F base = x;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

template <Field F>
F sign_power(long e) {
    return F(Rational(e % 2 == 0 ? 1 : -1));
}

}  // namespace qid

#endif  // QID_FIELD_HPP
