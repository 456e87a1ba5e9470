#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "qid/interpolation.hpp"
#include "qid/rational_function.hpp"

using qid::Alphabet;
using qid::QPolynomial;
using qid::Rational;
using qid::RationalFunction;

namespace {

std::mt19937 rng(424242);

Rational random_rational(long height = 20) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    return Rational(num(rng), den(rng));
}

std::vector<Rational> distinct_points(std::size_t n, long height = 20) {
    std::vector<Rational> pts;
    while (pts.size() < n) {
        const Rational r = random_rational(height);
        if (std::find(pts.begin(), pts.end(), r) == pts.end()) pts.push_back(r);
    }
    return pts;
}

std::vector<Rational> random_coeffs(int degree) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(random_rational());
    return c;
}

// Horner on a raw coefficient list, independent of Polynomial.
Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<Rational> values_of(const std::vector<Rational>& c, const std::vector<Rational>& pts) {
    std::vector<Rational> v;
    for (const auto& p : pts) v.push_back(horner(c, p));
    return v;
}

QPolynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPolynomial(v);
}

// Random polynomial in k variables given as a list of (coefficient, exponents).
struct MultiPoly {
    std::vector<std::pair<Rational, std::vector<int>>> terms;

    Rational operator()(std::span<const Rational> x) const {
        Rational s;
        for (const auto& [c, e] : terms) {
            Rational t = c;
            for (std::size_t j = 0; j < e.size(); ++j) t = t * pow(x[j], e[j]);
            s = s + t;
        }
        return s;
    }
};

MultiPoly random_multipoly(std::size_t vars, int max_degree) {
    MultiPoly p;
    std::uniform_int_distribution<int> count(1, 6), deg(0, max_degree);
    for (int t = count(rng); t > 0; --t) {
        std::vector<int> e(vars, 0);
        int budget = deg(rng);
        while (budget > 0) {
            ++e[std::uniform_int_distribution<std::size_t>(0, vars - 1)(rng)];
            --budget;
        }
        p.terms.emplace_back(random_rational(), e);
    }
    return p;
}

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndKeepsOrder) {
    EXPECT_THROW(Alphabet<Rational>({Rational(1), Rational(2), Rational(1)}), qid::DuplicatePoint);
    const Alphabet<Rational> a({Rational(3), Rational(1, 2), Rational(-2)});
    EXPECT_EQ(a.prefix(0).size(), 0u);
    EXPECT_EQ(a.prefix(2)[1], Rational(1, 2));
    EXPECT_EQ(a.without(1), (std::vector<Rational>{Rational(3), Rational(-2)}));
    EXPECT_TRUE(a.contains(Rational(-2)));
    EXPECT_FALSE(a.contains(Rational(2)));
}

TEST(RProduct, Examples) {
    const std::vector<Rational> x{Rational(5)}, y{Rational(3)}, none{}, ys{Rational(1), Rational(2)};
    EXPECT_EQ(qid::r_product<Rational>(x, y), Rational(2));
    EXPECT_EQ(qid::r_product<Rational>(none, ys), Rational(1));
    EXPECT_EQ(qid::r_product<Rational>(std::vector{Rational(2), Rational(3)}, std::vector{Rational(1)}), Rational(2));
    EXPECT_EQ(qid::r_product<Rational>(Rational(4), std::span<const Rational>(ys)), Rational(6));
}

TEST(DividedDifference, Examples) {
    const Alphabet<Rational> a({Rational(1), Rational(2)});
    const std::vector<Rational> cubes{Rational(1), Rational(8)};
    EXPECT_EQ(qid::divided_difference_apply<Rational>(cubes, a, 1), std::vector<Rational>{Rational(7)});
    const std::vector<Rational> constant{Rational(4), Rational(4)};
    EXPECT_EQ(qid::divided_difference_apply<Rational>(constant, a, 1), std::vector<Rational>{Rational(0)});
    EXPECT_THROW(qid::divided_difference_apply<Rational>(constant, a, 2), qid::ParameterError);

    // f = x^2 in the operator form: (x1^2 - x2^2)/(x1 - x2) = x1 + x2.
    qid::MultiFunction<Rational> square = [](std::span<const Rational> x) { return x[0] * x[0]; };
    const auto d1 = qid::divided_difference(square, 1);
    for (int t = 0; t < 20; ++t) {
        const auto p = distinct_points(2);
        EXPECT_EQ(d1(p), p[0] + p[1]);
    }
}

TEST(NewtonTable, Examples) {
    const Alphabet<Rational> a2({Rational(1), Rational(2)});
    EXPECT_EQ(qid::newton_table<Rational>(std::vector{Rational(1), Rational(2)}, a2).newton_coefficients(),
              (std::vector<Rational>{Rational(1), Rational(1)}));
    const Alphabet<Rational> a3({Rational(0), Rational(1), Rational(2)});
    const auto t = qid::newton_table<Rational>(std::vector{Rational(0), Rational(1), Rational(4)}, a3);
    EXPECT_EQ(t.newton_coefficients(), (std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
    EXPECT_EQ(qid::newton_interpolant(t, a3).poly, poly({0, 0, 1}));
    const Alphabet<Rational> a1({Rational(9)});
    EXPECT_EQ(qid::newton_table<Rational>(std::vector{Rational(5, 2)}, a1).newton_coefficients(),
              std::vector<Rational>{Rational(5, 2)});
    EXPECT_EQ(qid::newton_interpolant(qid::newton_table<Rational>(std::vector{Rational(5, 2)}, a1), a1).poly,
              QPolynomial(Rational(5, 2)));
}

TEST(NewtonTable, EntriesFollowTheRecurrence) {
    const auto pts = distinct_points(6);
    const Alphabet<Rational> a(pts);
    const auto vals = values_of(random_coeffs(7), pts);
    const auto t = qid::newton_table<Rational>(vals, a);
    for (std::size_t k = 1; k < t.size(); ++k) {
        for (std::size_t i = 0; i + k < pts.size(); ++i) {
            EXPECT_EQ(t.entry(i, k), (t.entry(i + 1, k - 1) - t.entry(i, k - 1)) / (pts[i + k] - pts[i]));
        }
    }
}

TEST(Lagrange, Examples) {
    const Alphabet<Rational> one({Rational(3)});
    EXPECT_EQ(qid::lagrange_interpolant<Rational>(std::vector{Rational(-4)}, one).poly, QPolynomial(Rational(-4)));
    const Alphabet<Rational> a2({Rational(1), Rational(2)});
    EXPECT_EQ(qid::lagrange_interpolant<Rational>(std::vector{Rational(1), Rational(2)}, a2).poly, poly({0, 1}));
    const Alphabet<Rational> a3({Rational(0), Rational(1), Rational(2)});
    const auto g = qid::lagrange_interpolant<Rational>(std::vector{Rational(0), Rational(1), Rational(8)}, a3).poly;
    EXPECT_EQ(g, poly({0, -2, 3}));
    for (const auto& x : a3.points()) EXPECT_EQ(g.evaluate(x), x * x * x);
}

TEST(Remainder, Examples) {
    const Alphabet<Rational> a({Rational(0), Rational(1)});
    const std::vector<Rational> squares{Rational(0), Rational(1)};
    EXPECT_EQ(qid::newton_remainder<Rational>(squares, Rational(9), a, Rational(3)), Rational(6));
    EXPECT_THROW(qid::newton_remainder<Rational>(squares, Rational(1), a, Rational(1)), qid::DuplicatePoint);
}

TEST(Remainder, CauchyKernelMatchesClosedForm) {
    const RationalFunction y = RationalFunction::indeterminate();
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto pts = distinct_points(n + 1);
        std::vector<RationalFunction> lifted, vals;
        for (std::size_t i = 0; i < n; ++i) {
            lifted.emplace_back(pts[i]);
            vals.push_back(qid::cauchy_kernel(pts[i]));
        }
        const Alphabet<RationalFunction> a(lifted);
        const RationalFunction x(pts[n]);
        const RationalFunction rem = qid::newton_remainder<RationalFunction>(vals, qid::cauchy_kernel(pts[n]), a, x);
        EXPECT_EQ(rem, qid::r_product<RationalFunction>(x, a.span()) /
                           (qid::r_product<RationalFunction>(y, a.span()) * (y - x)));
    }
}

TEST(CauchyKernel, Examples) {
    EXPECT_TRUE(qid::verify_cauchy_kernel(Alphabet<Rational>({Rational(4, 7)}), 1));
    EXPECT_TRUE(qid::verify_cauchy_kernel(Alphabet<Rational>({Rational(0), Rational(1)}), 2));
    EXPECT_TRUE(qid::verify_cauchy_kernel(
        Alphabet<Rational>({Rational(1), Rational(1, 2), Rational(-2), Rational(3)}), 4));
    EXPECT_THROW(qid::verify_cauchy_kernel(Alphabet<Rational>({Rational(1)}), 2), qid::ParameterError);

    // n = 2 by hand: (1/y - 1/(y-1))/(0-1) = 1/(y(y-1)).
    const RationalFunction y = RationalFunction::indeterminate();
    const RationalFunction by_hand = (RationalFunction(1) / y - RationalFunction(1) / (y - RationalFunction(1))) /
                                     RationalFunction(-1);
    EXPECT_EQ(by_hand, (y * (y - RationalFunction(1))).inverse());
}

TEST(PowerSum, Examples) {
    const Alphabet<Rational> a({Rational(1), Rational(2)});
    EXPECT_EQ(qid::power_sum_quotient(a, 2), Rational(3));
    EXPECT_TRUE(qid::verify_power_sum_h(a, 2));
    const Alphabet<Rational> b({Rational(1, 3), Rational(-2), Rational(5)});
    EXPECT_EQ(qid::power_sum_quotient(b, 0), Rational(0));
    EXPECT_EQ(qid::power_sum_quotient(b, 2), Rational(1));
    EXPECT_TRUE(qid::verify_power_sum_h(b, 0));
    EXPECT_TRUE(qid::verify_power_sum_h(b, 2));
}

TEST(InterpolationProperty, NewtonEqualsLagrangeAndReproduces) {
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const int degree = std::uniform_int_distribution<int>(0, 10)(rng);
        const auto pts = distinct_points(n);
        const Alphabet<Rational> a(pts);
        const auto coeffs = random_coeffs(degree);
        const auto vals = values_of(coeffs, pts);
        const auto newton = qid::newton_interpolant(qid::newton_table<Rational>(vals, a), a);
        const auto lagrange = qid::lagrange_interpolant<Rational>(vals, a);
        EXPECT_EQ(newton.poly, lagrange.poly);
        EXPECT_LE(newton.poly.degree(), static_cast<long>(n) - 1);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(newton.poly.evaluate(pts[i]), vals[i]);
        if (degree <= static_cast<long>(n) - 1) {
            EXPECT_EQ(newton.poly, QPolynomial(coeffs));
            for (std::size_t k = 0; k < 2 * n; ++k) {
                const Rational x = random_rational(50);
                if (a.contains(x)) continue;
                EXPECT_TRUE(qid::newton_remainder<Rational>(vals, horner(coeffs, x), a, x).is_zero());
            }
        }
    }
}

TEST(InterpolationProperty, NewtonEqualsLagrangeOverQy) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto pts = distinct_points(n);
        std::vector<RationalFunction> lifted, vals;
        for (const auto& p : pts) {
            lifted.emplace_back(p);
            vals.push_back(qid::cauchy_kernel(p));
        }
        const Alphabet<RationalFunction> a(lifted);
        const auto newton = qid::newton_interpolant(qid::newton_table<RationalFunction>(vals, a), a);
        const auto lagrange = qid::lagrange_interpolant<RationalFunction>(vals, a);
        EXPECT_EQ(newton.poly, lagrange.poly);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(newton.poly.evaluate(lifted[i]), vals[i]);
    }
}

TEST(OperatorAlgebra, SquareOfDividedDifferenceVanishes) {
    for (int t = 0; t < 50; ++t) {
        const std::size_t vars = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
        const MultiPoly g = random_multipoly(vars, 6);
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, vars - 1)(rng);
        const auto dd = qid::divided_difference<Rational>(qid::divided_difference<Rational>(g, i), i);
        const auto pts = distinct_points(vars);
        EXPECT_TRUE(dd(pts).is_zero());
    }
}

TEST(OperatorAlgebra, BraidRelation) {
    for (int t = 0; t < 50; ++t) {
        const std::size_t vars = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
        const MultiPoly g = random_multipoly(vars, 6);
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, vars - 2)(rng);
        using qid::divided_difference;
        const auto left = divided_difference<Rational>(divided_difference<Rational>(divided_difference<Rational>(g, i), i + 1), i);
        const auto right =
            divided_difference<Rational>(divided_difference<Rational>(divided_difference<Rational>(g, i + 1), i), i + 1);
        for (int k = 0; k < 3; ++k) {
            const auto pts = distinct_points(vars);
            EXPECT_EQ(left(pts), right(pts));
        }
    }
}

TEST(OperatorAlgebra, DegreeLowering) {
    for (int t = 0; t < 30; ++t) {
        const int d = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto coeffs = random_coeffs(d);
        // Column k of the table of a degree-d polynomial: column d is the
        // constant leading coefficient, column d + 1 vanishes.
        const auto pts = distinct_points(static_cast<std::size_t>(d) + 3);
        const Alphabet<Rational> a(pts);
        const auto table = qid::newton_table<Rational>(values_of(coeffs, pts), a);
        for (const auto& v : table.column(static_cast<std::size_t>(d))) EXPECT_EQ(v, coeffs.back());
        for (const auto& v : table.column(static_cast<std::size_t>(d) + 1)) EXPECT_TRUE(v.is_zero());

        // In the operator form, f d_1 with x_2 fixed is a polynomial of degree
        // <= d - 1 in x_1: its interpolant on d points predicts further values.
        qid::MultiFunction<Rational> f = [coeffs](std::span<const Rational> x) { return horner(coeffs, x[0]); };
        const auto fd = qid::divided_difference(f, 1);
        const Rational x2 = Rational(1000);
        const auto xs = distinct_points(static_cast<std::size_t>(d) + 4);
        std::vector<Rational> first(xs.begin(), xs.begin() + d), vals;
        for (const auto& x : first) vals.push_back(fd(std::vector{x, x2}));
        const auto g = qid::lagrange_interpolant<Rational>(vals, Alphabet<Rational>(first)).poly;
        EXPECT_LE(g.degree(), d - 1);
        for (std::size_t k = static_cast<std::size_t>(d); k < xs.size(); ++k) {
            EXPECT_EQ(g.evaluate(xs[k]), fd(std::vector{xs[k], x2}));
        }
    }
}
