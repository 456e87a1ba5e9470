#ifndef QID_RATIONAL_FUNCTION_HPP
#define QID_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <string>
#include <utility>

#include "qid/errors.hpp"
#include "qid/polynomial.hpp"
#include "qid/rational.hpp"

namespace qid {

using QPolynomial = Polynomial<Rational>;

/// Element of Q(t): a reduced fraction with monic denominator.
///
/// The canonical form makes equality structural, which is what every
/// identity verifier relies on. The indeterminate carries no name; the same
/// type serves as Q(q) and as Q(y).
class RationalFunction {
public:
    RationalFunction() : den_(QPolynomial::one()) {}
    RationalFunction(const Rational& c) : num_(c), den_(QPolynomial::one()) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}                 // NOLINT
    RationalFunction(int c) : RationalFunction(Rational(c)) {}                  // NOLINT
    explicit RationalFunction(QPolynomial p) : num_(std::move(p)), den_(QPolynomial::one()) {}

    /// Canonical form of num/den.
    static RationalFunction normalize(const QPolynomial& num, const QPolynomial& den) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        RationalFunction r;
        if (num.is_zero()) return r;
        const QPolynomial g = gcd(num, den);
        QPolynomial n = g.is_one() ? num : exact_quotient(num, g);
        QPolynomial d = g.is_one() ? den : exact_quotient(den, g);
        const Rational lead = d.leading();
        if (!lead.is_one()) {
            n = n / lead;
            d = d / lead;
        }
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    /// The indeterminate t.
    static RationalFunction indeterminate() { return RationalFunction(QPolynomial::identity()); }

    /// t^k for any integer k.
    static RationalFunction monomial(long k) {
        RationalFunction r;
        if (k >= 0) {
            r.num_ = QPolynomial::monomial(Rational(1), static_cast<std::size_t>(k));
        } else {
            r.num_ = QPolynomial::one();
            r.den_ = QPolynomial::monomial(Rational(1), static_cast<std::size_t>(-k));
        }
        return r;
    }

    const QPolynomial& numerator() const noexcept { return num_; }
    const QPolynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Exact value at t = point; throws PoleAtEvaluation at a pole.
    Rational evaluate(const Rational& point) const {
        const Rational d = den_.evaluate(point);
        if (d.is_zero()) throw PoleAtEvaluation("pole at t = " + point.to_string());
        return num_.evaluate(point) / d;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.den_ == y.den_) {
            if (x.den_.is_one()) return RationalFunction(x.num_ + y.num_);
            return normalize_sum(x.num_ + y.num_, x.den_);
        }
        const QPolynomial g = gcd(x.den_, y.den_);
        if (g.is_one()) {
            RationalFunction r;
            r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
            r.den_ = x.den_ * y.den_;
            return r;
        }
        const QPolynomial xd = exact_quotient(x.den_, g);
        const QPolynomial yd = exact_quotient(y.den_, g);
        QPolynomial t = x.num_ * yd + y.num_ * xd;
        if (t.is_zero()) return {};
        const QPolynomial g2 = gcd(t, g);
        RationalFunction r;
        if (g2.is_one()) {
            r.num_ = std::move(t);
            r.den_ = xd * y.den_;
        } else {
            r.num_ = exact_quotient(t, g2);
            r.den_ = xd * exact_quotient(y.den_, g2);
        }
        return r;
    }

    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
        return x + (-y);
    }

    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
        if (x.is_zero() || y.is_zero()) return {};
        const QPolynomial g1 = gcd(x.num_, y.den_);
        const QPolynomial g2 = gcd(y.num_, x.den_);
        RationalFunction r;
        r.num_ = (g1.is_one() ? x.num_ : exact_quotient(x.num_, g1)) *
                 (g2.is_one() ? y.num_ : exact_quotient(y.num_, g2));
        r.den_ = (g2.is_one() ? x.den_ : exact_quotient(x.den_, g2)) *
                 (g1.is_one() ? y.den_ : exact_quotient(y.den_, g1));
        return r;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
        RationalFunction r;
        const Rational lead = num_.leading();
        r.num_ = den_ / lead;
        r.den_ = num_ / lead;
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
        if (y.is_zero()) throw DivisionByZero("rational function divided by zero");
        return x * y.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string(const std::string& var = "q") const {
        if (den_.is_one()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
        return os << r.to_string();
    }

private:
    // num/den where den is already monic.
    static RationalFunction normalize_sum(QPolynomial num, const QPolynomial& den) {
        RationalFunction r;
        if (num.is_zero()) return r;
        const QPolynomial g = gcd(num, den);
        if (g.is_one()) {
            r.num_ = std::move(num);
            r.den_ = den;
        } else {
            r.num_ = exact_quotient(num, g);
            r.den_ = exact_quotient(den, g);
        }
        return r;
    }

    QPolynomial num_;
    QPolynomial den_;
};

}  // namespace qid

#endif  // QID_RATIONAL_FUNCTION_HPP
