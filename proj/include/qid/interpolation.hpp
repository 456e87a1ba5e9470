#ifndef QID_INTERPOLATION_HPP
#define QID_INTERPOLATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qid/errors.hpp"
#include "qid/field.hpp"
#include "qid/polynomial.hpp"
#include "qid/qseries.hpp"
#include "qid/summation.hpp"

namespace qid {

/// Ordered list of pairwise distinct interpolation points x_1, ..., x_n.
template <Field F>
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<F> points) : points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (std::size_t j = i + 1; j < points_.size(); ++j) {
                if (points_[i] == points_[j]) {
                    throw DuplicatePoint("alphabet points " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " coincide");
                }
            }
        }
    }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const F& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<F>& points() const noexcept { return points_; }
    std::span<const F> span() const noexcept { return points_; }

    /// The first i points {x_1, ..., x_i}; prefix(0) is empty.
    std::span<const F> prefix(std::size_t i) const { return span().first(i); }

    /// All points except the one at (0-based) position i.
    std::vector<F> without(std::size_t i) const {
        std::vector<F> r;
        r.reserve(points_.size() - 1);
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (j != i) r.push_back(points_[j]);
        }
        return r;
    }

    bool contains(const F& x) const {
        for (const auto& p : points_) {
            if (p == x) return true;
        }
        return false;
    }

private:
    std::vector<F> points_;
};

/// R(A, B) = prod over a in A, b in B of (a - b). Empty products are 1.
template <Field F>
F r_product(std::span<const F> a, std::span<const F> b) {
    F r(Rational(1));
    for (const auto& x : a) {
        for (const auto& y : b) r = r * (x - y);
    }
    return r;
}

/// R({x}, B).
template <Field F>
F r_product(const F& x, std::span<const F> b) {
    return r_product(std::span<const F>(&x, 1), b);
}

/// One step of the divided-difference table.
///
/// `values` is column order-1 of the table over A: entry j holds
/// f[x_j, ..., x_{j+order-1}] (column 0 is just f(x_j)). Returns column
/// `order`, entry j = (values[j] - values[j+1]) / (x_j - x_{j+order}).
/// For column 0 and order 1 this is f d_1 evaluated on adjacent pairs.
template <Field F>
std::vector<F> divided_difference_apply(std::span<const F> values, const Alphabet<F>& a,
                                        std::size_t order) {
    if (order < 1 || order >= a.size() + 1 || values.size() != a.size() - order + 1 ||
        values.size() < 2) {
        throw ParameterError("divided_difference_apply: column length does not match alphabet");
    }
    std::vector<F> out;
    out.reserve(values.size() - 1);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        const F gap = a[j] - a[j + order];
        if (gap.is_zero()) throw DuplicatePoint("divided difference over coinciding points");
        out.push_back((values[j] - values[j + 1]) / gap);
    }
    return out;
}

/// Triangular table of divided differences. column(k)[j] = f[x_j, ..., x_{j+k}].
template <Field F>
class DividedDifferenceTable {
public:
    DividedDifferenceTable(std::span<const F> values, const Alphabet<F>& a) {
        if (values.size() != a.size()) {
            throw ParameterError("newton_table: " + std::to_string(values.size()) +
                                 " values for an alphabet of size " + std::to_string(a.size()));
        }
        if (values.empty()) return;
        columns_.emplace_back(values.begin(), values.end());
        for (std::size_t k = 1; k < values.size(); ++k) {
            columns_.push_back(divided_difference_apply<F>(columns_.back(), a, k));
        }
    }

    std::size_t size() const noexcept { return columns_.size(); }
    const std::vector<F>& column(std::size_t k) const { return columns_.at(k); }
    const F& entry(std::size_t j, std::size_t k) const { return columns_.at(k).at(j); }

    /// f(x_1), f d_1, f d_1 d_2, ..., f d_1 ... d_{n-1}.
    std::vector<F> newton_coefficients() const {
        std::vector<F> c;
        c.reserve(columns_.size());
        for (const auto& col : columns_) c.push_back(col.front());
        return c;
    }

    /// f d_1 ... d_{n-1}.
    const F& top() const { return columns_.back().front(); }

private:
    std::vector<std::vector<F>> columns_;
};

template <Field F>
DividedDifferenceTable<F> newton_table(std::span<const F> values, const Alphabet<F>& a) {
    return DividedDifferenceTable<F>(values, a);
}

enum class InterpolantSource { newton, lagrange };

template <Field F>
struct Interpolant {
    Polynomial<F> poly;
    InterpolantSource source;
};

/// prod over b in B of (x - b), as a polynomial in x.
template <Field F>
Polynomial<F> r_polynomial(std::span<const F> b) {
    Polynomial<F> p = Polynomial<F>::one();
    for (const auto& v : b) p = p * Polynomial<F>{-v, F(Rational(1))};
    return p;
}

/// Newton form: sum of coeff_i * R(x, A_i), i = 0..n-1.
template <Field F>
Interpolant<F> newton_interpolant(const DividedDifferenceTable<F>& table, const Alphabet<F>& a) {
    if (table.size() != a.size()) throw ParameterError("table was not built over this alphabet");
    const auto coeffs = table.newton_coefficients();
    Polynomial<F> poly;
    Polynomial<F> basis = Polynomial<F>::one();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        poly += basis * coeffs[i];
        basis = basis * Polynomial<F>{-a[i], F(Rational(1))};
    }
    return {std::move(poly), InterpolantSource::newton};
}

/// Lagrange form: sum of f(x_i) R(x, A \ x_i) / R(x_i, A \ x_i).
template <Field F>
Interpolant<F> lagrange_interpolant(std::span<const F> values, const Alphabet<F>& a) {
    if (values.size() != a.size()) {
        throw ParameterError("lagrange_interpolant: value count does not match alphabet");
    }
    Polynomial<F> poly;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto rest = a.without(i);
        const F denom = r_product<F>(a[i], rest);
        if (denom.is_zero()) throw DuplicatePoint("lagrange basis over coinciding points");
        poly += r_polynomial<F>(rest) * (values[i] / denom);
    }
    return {std::move(poly), InterpolantSource::lagrange};
}

/// f(x) minus the degree <= n-1 interpolant at x, computed as the top divided
/// difference over A + {x} times R(x, A).
template <Field F>
F newton_remainder(std::span<const F> values, const F& fx, const Alphabet<F>& a, const F& x) {
    if (a.contains(x)) throw DuplicatePoint("remainder point coincides with an alphabet point");
    std::vector<F> pts = a.points();
    pts.push_back(x);
    std::vector<F> vals(values.begin(), values.end());
    vals.push_back(fx);
    const Alphabet<F> extended(std::move(pts));
    return newton_table<F>(vals, extended).top() * r_product<F>(x, a.span());
}

/// Function of finitely many variables, used to apply the operators d_i
/// outside the one-variable table setting.
template <Field F>
using MultiFunction = std::function<F(std::span<const F>)>;

/// g d_i: (g(..., x_i, x_{i+1}, ...) - g(..., x_{i+1}, x_i, ...)) / (x_i - x_{i+1}),
/// with i 1-based as in the operator notation.
template <Field F>
MultiFunction<F> divided_difference(MultiFunction<F> g, std::size_t i) {
    if (i < 1) throw ParameterError("divided difference index starts at 1");
    return [g = std::move(g), i](std::span<const F> x) -> F {
        if (x.size() <= i) throw ParameterError("too few variables for d_" + std::to_string(i));
        const F gap = x[i - 1] - x[i];
        if (gap.is_zero()) throw DuplicatePoint("d_" + std::to_string(i) + " at coinciding points");
        std::vector<F> swapped(x.begin(), x.end());
        std::swap(swapped[i - 1], swapped[i]);
        return (g(x) - g(swapped)) / gap;
    };
}

/// f(x) = 1/(y - x) over Q(y), at rational x.
inline RationalFunction cauchy_kernel(const Rational& x) {
    return RationalFunction(1) / (RationalFunction::indeterminate() - RationalFunction(x));
}

/// Checks f d_1 ... d_{n-1} = 1/((y - x_1)...(y - x_n)) for f = 1/(y - x),
/// using the first n points of a rational alphabet and working in Q(y).
inline bool verify_cauchy_kernel(const Alphabet<Rational>& a, std::size_t n) {
    if (n < 1 || n > a.size()) throw ParameterError("verify_cauchy_kernel needs 1 <= n <= |A|");
    std::vector<RationalFunction> pts, vals;
    for (std::size_t i = 0; i < n; ++i) {
        pts.emplace_back(a[i]);
        vals.push_back(cauchy_kernel(a[i]));
    }
    const Alphabet<RationalFunction> lifted(std::move(pts));
    const RationalFunction top = newton_table<RationalFunction>(vals, lifted).top();
    RationalFunction expected(1);
    const RationalFunction y = RationalFunction::indeterminate();
    for (std::size_t i = 0; i < n; ++i) expected = expected * (y - lifted[i]);
    return top == expected.inverse();
}

/// sum_i x_i^m / prod_{j != i} (x_i - x_j), the power-sum side of the
/// complete-function identity.
template <Field F>
F power_sum_quotient(const Alphabet<F>& a, long m) {
    Summation<F> sum;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum.add(power(a[i], m) / r_product<F>(a[i], a.without(i)));
    }
    return sum.value();
}

/// Checks x_1^m d_1...d_{n-1} = sum_i x_i^m / prod_{j!=i}(x_i - x_j) = h_{m-n+1}(A).
template <Field F>
bool verify_power_sum_h(const Alphabet<F>& a, long m) {
    if (a.empty()) throw ParameterError("verify_power_sum_h needs a nonempty alphabet");
    if (m < 0) throw ParameterError("verify_power_sum_h needs m >= 0");
    const long n = static_cast<long>(a.size());
    const F quotient = power_sum_quotient(a, m);
    std::vector<F> vals;
    for (const auto& x : a.points()) vals.push_back(power(x, m));
    const F top = newton_table<F>(vals, a).top();
    return quotient == top && quotient == complete_homogeneous<F>(m - n + 1, a.span());
}

}  // namespace qid

#endif  // QID_INTERPOLATION_HPP
