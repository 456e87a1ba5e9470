#ifndef QID_QSERIES_HPP
#define QID_QSERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qid/errors.hpp"
#include "qid/field.hpp"
#include "qid/polynomial.hpp"
#include "qid/rational_function.hpp"
#include "qid/summation.hpp"

namespace qid {

/// (z;q)_n = (1 - z)(1 - zq)...(1 - zq^{n-1}); the empty product is 1.
template <Field F>
F pochhammer(const F& z, const F& q, long n) {
    if (n < 0) throw ParameterError("pochhammer length must be nonnegative");
    const F one(Rational(1));
    F result = one;
    F zqk = z;
    for (long k = 0; k < n; ++k) {
        result = result * (one - zqk);
        if (k + 1 < n) zqk = zqk * q;
    }
    return result;
}

/// (z;q)_n for z a polynomial in q, as a polynomial in q.
inline QPolynomial pochhammer(const QPolynomial& z, long n) {
    if (n < 0) throw ParameterError("pochhammer length must be nonnegative");
    QPolynomial result = QPolynomial::one();
    for (long k = 0; k < n; ++k) {
        result = result * (QPolynomial::one() - z.shifted(static_cast<std::size_t>(k)));
    }
    return result;
}

/// (q;q)_n as a polynomial in q.
inline QPolynomial q_factorial(long n) { return pochhammer(QPolynomial::identity(), n); }

/// Gauss polynomial [n, i] = (q;q)_n / ((q;q)_i (q;q)_{n-i}), obtained by exact
/// polynomial division. Zero outside 0 <= i <= n.
inline QPolynomial gauss_binomial(long n, long i) {
    if (n < 0) throw ParameterError("gauss_binomial requires n >= 0");
    if (i < 0 || i > n) return {};
    return exact_quotient(q_factorial(n), q_factorial(i) * q_factorial(n - i));
}

/// [n, i] evaluated at q in any field.
template <Field F>
F gauss_binomial_at(long n, long i, const F& q) {
    return gauss_binomial(n, i).evaluate_in(q);
}

/// Number of weakly increasing k-tuples drawn from n indices: C(n+k-1, k).
inline mpz_class multiset_count(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n <= 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
    return r;
}

/// Visits every weakly increasing index tuple 0 <= i_1 <= ... <= i_k < n in
/// lexicographic order. The callback receives the tuple as a span.
template <class Visit>
void for_each_multiset(std::size_t n, long k, Visit&& visit) {
    if (k < 0) return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    if (k == 0) {
        visit(std::span<const std::size_t>(idx));
        return;
    }
    if (n == 0) return;
    for (;;) {
        visit(std::span<const std::size_t>(idx));
        std::size_t j = idx.size();
        while (j > 0 && idx[j - 1] == n - 1) --j;
        if (j == 0) return;
        const std::size_t v = idx[j - 1] + 1;
        for (std::size_t t = j - 1; t < idx.size(); ++t) idx[t] = v;
    }
}

/// Complete homogeneous symmetric function h_k(x_1, ..., x_n), summed term by
/// term over weakly increasing index tuples. h_0 = 1 and h_k = 0 for k < 0.
///
/// Products along a tuple share their prefix with the previous tuple, so each
/// new term costs one multiplication per changed position.
template <Field F>
F complete_homogeneous(long k, std::span<const F> xs) {
    const F one(Rational(1));
    if (k < 0) return F(Rational(0));
    if (k == 0) return one;
    if (xs.empty()) return F(Rational(0));
    const std::size_t n = xs.size();
    const auto depth = static_cast<std::size_t>(k);
    std::vector<std::size_t> idx(depth, 0);
    // prefix[j] = x_{idx[0]} * ... * x_{idx[j]}
    std::vector<F> prefix(depth, one);
    auto rebuild = [&](std::size_t from) {
        for (std::size_t t = from; t < depth; ++t) {
            prefix[t] = (t == 0 ? one : prefix[t - 1]) * xs[idx[t]];
        }
    };
    rebuild(0);
    Summation<F> sum;
    for (;;) {
        sum.add(prefix.back());
        std::size_t j = depth;
        while (j > 0 && idx[j - 1] == n - 1) --j;
        if (j == 0) break;
        const std::size_t v = idx[j - 1] + 1;
        for (std::size_t t = j - 1; t < depth; ++t) idx[t] = v;
        rebuild(j - 1);
    }
    return sum.value();
}

template <Field F>
F complete_homogeneous(long k, const std::vector<F>& xs) {
    return complete_homogeneous<F>(k, std::span<const F>(xs));
}

}  // namespace qid

#endif  // QID_QSERIES_HPP
