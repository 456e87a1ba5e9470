#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qid/qseries.hpp"
#include "qid/rational_function.hpp"

using qid::QPolynomial;
using qid::Rational;
using qid::RationalFunction;

namespace {

std::mt19937 rng(7);

// Partitions of k into at most `parts` parts, each at most `largest`.
long partitions_in_box(long k, long parts, long largest) {
    if (k == 0) return 1;
    if (parts == 0 || largest == 0 || k < 0) return 0;
    // Either no part equals `largest`, or remove one part of size `largest`.
    return partitions_in_box(k, parts, largest - 1) + partitions_in_box(k - largest, parts - 1, largest);
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n).
Rational h_recursive(long k, const std::vector<Rational>& xs, std::size_t n) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (n == 0) return Rational(0);
    return h_recursive(k, xs, n - 1) + xs[n - 1] * h_recursive(k - 1, xs, n);
}

QPolynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPolynomial(v);
}

}  // namespace

TEST(Pochhammer, Examples) {
    EXPECT_EQ(qid::q_factorial(2), poly({1, -1, -1, 1}));
    EXPECT_EQ(qid::q_factorial(3), poly({1, -1, -1, 0, 1, 1, -1}));
    EXPECT_EQ(qid::q_factorial(0), QPolynomial::one());
    EXPECT_EQ(qid::pochhammer(Rational(5, 3), Rational(1, 2), 0), Rational(1));
    // (2;1/2)_3 = (1-2)(1-1)(1-1/2) = 0
    EXPECT_EQ(qid::pochhammer(Rational(2), Rational(1, 2), 3), Rational(0));
    EXPECT_EQ(qid::pochhammer(Rational(1, 3), Rational(1, 2), 2), Rational(2, 3) * Rational(5, 6));
}

TEST(Pochhammer, Recurrence) {
    const QPolynomial q = QPolynomial::identity();
    const QPolynomial z{Rational(0), Rational(3), Rational(-1, 2)};
    for (long n = 0; n < 30; ++n) {
        const QPolynomial zqn = z * QPolynomial::monomial(Rational(1), static_cast<std::size_t>(n));
        EXPECT_EQ(qid::pochhammer(z, n + 1), qid::pochhammer(z, n) * (QPolynomial::one() - zqn));
        EXPECT_EQ(qid::q_factorial(n + 1),
                  qid::q_factorial(n) * (QPolynomial::one() - QPolynomial::monomial(Rational(1), n + 1)));
    }
    // The generic version over Q(q) agrees with the polynomial one.
    const RationalFunction qf = RationalFunction::indeterminate();
    EXPECT_EQ(qid::pochhammer(qf * qf, qf, 6), RationalFunction(qid::pochhammer(q * q, 6)));
}

TEST(GaussBinomial, Examples) {
    EXPECT_EQ(qid::gauss_binomial(4, 2), poly({1, 1, 2, 1, 1}));
    EXPECT_EQ(qid::gauss_binomial(5, 0), QPolynomial::one());
    EXPECT_TRUE(qid::gauss_binomial(3, 5).is_zero());
    EXPECT_TRUE(qid::gauss_binomial(3, -1).is_zero());
    EXPECT_EQ(qid::gauss_binomial(2, 1), poly({1, 1}));
}

TEST(GaussBinomial, CoefficientsCountPartitionsInABox) {
    for (long n = 0; n <= 14; ++n) {
        for (long i = 0; i <= n; ++i) {
            const QPolynomial g = qid::gauss_binomial(n, i);
            ASSERT_EQ(g.degree(), i * (n - i));
            for (long k = 0; k <= i * (n - i); ++k) {
                EXPECT_EQ(g.coeff(static_cast<std::size_t>(k)), Rational(partitions_in_box(k, i, n - i)))
                    << "n=" << n << " i=" << i << " k=" << k;
            }
        }
    }
}

TEST(GaussBinomial, SymmetryPascalAndClassicalLimit) {
    const QPolynomial one = QPolynomial::one();
    for (long n = 0; n <= 20; ++n) {
        for (long i = 0; i <= n; ++i) {
            const QPolynomial g = qid::gauss_binomial(n, i);
            EXPECT_EQ(g, qid::gauss_binomial(n, n - i));
            EXPECT_EQ(g.evaluate(Rational(1)), Rational(binomial(n, i)));
            const auto& c = g.coefficients();
            for (std::size_t k = 0; k < c.size(); ++k) {
                EXPECT_EQ(c[k], c[c.size() - 1 - k]);
                EXPECT_TRUE(c[k].is_integer() && c[k].sign() > 0);
            }
            if (i >= 1 && i <= n - 1) {
                EXPECT_EQ(g, qid::gauss_binomial(n - 1, i - 1) +
                                 QPolynomial::monomial(Rational(1), static_cast<std::size_t>(i)) *
                                     qid::gauss_binomial(n - 1, i));
            }
        }
    }
}

TEST(GaussBinomial, EvaluatedInAField) {
    const Rational q(2, 5);
    // [4 2] at q = 2/5 from the coefficient list 1,1,2,1,1.
    const Rational expected = Rational(1) + q + Rational(2) * q * q + q * q * q + q * q * q * q;
    EXPECT_EQ(qid::gauss_binomial_at(4, 2, q), expected);
    EXPECT_EQ(qid::gauss_binomial_at(3, 7, q), Rational(0));
}

TEST(CompleteHomogeneous, Conventions) {
    const std::vector<Rational> xs{Rational(2), Rational(-1, 3), Rational(5)};
    EXPECT_EQ(qid::complete_homogeneous<Rational>(0, xs), Rational(1));
    EXPECT_EQ(qid::complete_homogeneous<Rational>(-1, xs), Rational(0));
    EXPECT_EQ(qid::complete_homogeneous<Rational>(-5, xs), Rational(0));
    EXPECT_EQ(qid::complete_homogeneous<Rational>(0, std::vector<Rational>{}), Rational(1));
    EXPECT_EQ(qid::complete_homogeneous<Rational>(3, std::vector<Rational>{}), Rational(0));
}

TEST(CompleteHomogeneous, TwoVariablesDegreeTwo) {
    for (int t = 0; t < 50; ++t) {
        const Rational a(std::uniform_int_distribution<long>(-9, 9)(rng), 7);
        const Rational b(std::uniform_int_distribution<long>(-9, 9)(rng), 4);
        EXPECT_EQ(qid::complete_homogeneous<Rational>(2, std::vector{a, b}), a * a + a * b + b * b);
    }
}

TEST(CompleteHomogeneous, AllOnesCountsMultisets) {
    for (long n = 1; n <= 8; ++n) {
        const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
        for (long k = 0; k <= 6; ++k) {
            EXPECT_EQ(qid::complete_homogeneous<Rational>(k, ones), Rational(binomial(n + k - 1, k)));
            EXPECT_EQ(qid::multiset_count(n, k), binomial(n + k - 1, k));
        }
    }
    EXPECT_EQ(qid::multiset_count(12, 6), 12376);
}

TEST(CompleteHomogeneous, MatchesRecursionOnRandomAlphabets) {
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> xs;
        for (int k = std::uniform_int_distribution<int>(1, 6)(rng); k > 0; --k) {
            xs.emplace_back(std::uniform_int_distribution<long>(-20, 20)(rng),
                            std::uniform_int_distribution<long>(1, 20)(rng));
        }
        const long k = std::uniform_int_distribution<long>(0, 6)(rng);
        EXPECT_EQ(qid::complete_homogeneous<Rational>(k, xs), h_recursive(k, xs, xs.size()));
    }
}

TEST(CompleteHomogeneous, MultisetEnumeration) {
    std::vector<std::vector<std::size_t>> seen;
    qid::for_each_multiset(3, 2, [&](std::span<const std::size_t> idx) {
        seen.emplace_back(idx.begin(), idx.end());
    });
    const std::vector<std::vector<std::size_t>> expected{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    EXPECT_EQ(seen, expected);
}

TEST(CompleteHomogeneous, OverRationalFunctions) {
    // h_2(q/(1-q), q^2/(1-q^2)) against its expansion over a common denominator.
    const RationalFunction q = RationalFunction::indeterminate();
    const RationalFunction x1 = q / (RationalFunction(1) - q);
    const RationalFunction x2 = q * q / (RationalFunction(1) - q * q);
    EXPECT_EQ(qid::complete_homogeneous<RationalFunction>(2, std::vector{x1, x2}), x1 * x1 + x1 * x2 + x2 * x2);
}
