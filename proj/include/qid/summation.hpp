#ifndef QID_SUMMATION_HPP
#define QID_SUMMATION_HPP

#include "qid/field.hpp"
#include "qid/rational_function.hpp"

namespace qid {

/// Running sum of field elements.
template <Field F>
class Summation {
public:
    void add(const F& term) { total_ = total_ + term; }
    const F& value() const { return total_; }

private:
    F total_{Rational(0)};
};

/// Sums in Q(t) are kept over a common denominator (the lcm of the terms'
/// denominators) and reduced once at the end, so long sums pay for a single
/// gcd instead of one per term.
template <>
class Summation<RationalFunction> {
public:
    void add(const RationalFunction& term) {
        if (term.is_zero()) return;
        const QPolynomial& d = term.denominator();
        if (d == den_) {
            num_ += term.numerator();
            return;
        }
        if (d.is_one()) {
            num_ += term.numerator() * den_;
            return;
        }
        auto [cofactor, rem] = divrem(den_, d);
        if (rem.is_zero()) {
            num_ += term.numerator() * cofactor;
            return;
        }
        const QPolynomial g = gcd(den_, d);
        const QPolynomial extra = exact_quotient(d, g);
        num_ = num_ * extra + term.numerator() * exact_quotient(den_, g);
        den_ = den_ * extra;
    }

    RationalFunction value() const { return RationalFunction::normalize(num_, den_); }

private:
    QPolynomial num_;
    QPolynomial den_ = QPolynomial::one();
};

}  // namespace qid

#endif  // QID_SUMMATION_HPP
