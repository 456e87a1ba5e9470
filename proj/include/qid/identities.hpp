#ifndef QID_IDENTITIES_HPP
#define QID_IDENTITIES_HPP

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qid/errors.hpp"
#include "qid/field.hpp"
#include "qid/grid.hpp"
#include "qid/interpolation.hpp"
#include "qid/qseries.hpp"
#include "qid/rational_function.hpp"
#include "qid/report.hpp"
#include "qid/summation.hpp"

namespace qid {

using RF = RationalFunction;

template <Field F>
struct Sides {
    F lhs;
    F rhs;
};

namespace detail {

inline long choose2(long i) { return i * (i - 1) / 2; }

template <Field F>
F apply_mutation(const F& term, const F& q, Mutation m) {
    switch (m) {
        case Mutation::none: return term;
        case Mutation::flip_sign: return -term;
        case Mutation::shift_exponent: return term * q;
    }
    return term;
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline IdentityReport symbolic_report(IdentityParams params, RF lhs, RF rhs, const Stopwatch& clock) {
    IdentityReport r;
    r.params = std::move(params);
    r.status = lhs == rhs ? Status::verified : Status::refuted;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

inline RF q_pow(long k) { return RF::monomial(k); }
inline RF gauss(long n, long i) { return RF(gauss_binomial(n, i)); }
inline Rational alternating(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

inline std::vector<Rational> default_alphabet(long n) {
    std::vector<Rational> pts;
    for (long i = 1; i <= n; ++i) pts.emplace_back((i % 2 == 1 ? 1 : -1) * (2 * i - 1), i + 1);
    return pts;
}

inline std::vector<Rational> doubling_alphabet(long n) {
    std::vector<Rational> pts;
    for (long i = 1; i <= n; ++i) pts.push_back(pow(Rational(2), i));
    return pts;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identities in Q(q) alone: exact comparison of canonical forms.

/// sum_i [n,i] (-1)^{i-1} q^{C(i+1,2)} / (1 - q^i)  =  sum_i q^i / (1 - q^i).
inline IdentityReport verify_van_hamme(long n, Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::van_hamme, .n = n, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const RF q = RF::indeterminate();
    Summation<RF> lhs, rhs;
    for (long i = 1; i <= n; ++i) {
        const RF geometric = RF(1) - detail::q_pow(i);
        RF term = detail::gauss(n, i) * RF(detail::alternating(i - 1)) * detail::q_pow(i * (i + 1) / 2) / geometric;
        if (i == n) term = detail::apply_mutation(term, q, mutation);
        lhs.add(term);
        rhs.add(detail::q_pow(i) / geometric);
    }
    return detail::symbolic_report(std::move(params), lhs.value(), rhs.value(), clock);
}

/// sum_i [n,i] (-1)^{i-1} q^{C(i+1,2)} / (1 - q^{i+m})  =  sum_i (q^i/(1-q^i)) / [i+m, i].
inline IdentityReport verify_uchimura(long n, long m, Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::uchimura, .n = n, .m = m, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const RF q = RF::indeterminate();
    Summation<RF> lhs, rhs;
    for (long i = 1; i <= n; ++i) {
        RF term = detail::gauss(n, i) * RF(detail::alternating(i - 1)) * detail::q_pow(i * (i + 1) / 2) /
                  (RF(1) - detail::q_pow(i + m));
        if (i == n) term = detail::apply_mutation(term, q, mutation);
        lhs.add(term);
        rhs.add(detail::q_pow(i) / (RF(1) - detail::q_pow(i)) / detail::gauss(i + m, i));
    }
    return detail::symbolic_report(std::move(params), lhs.value(), rhs.value(), clock);
}

/// sum_i [n,i] (-1)^{i-1} q^{C(i,2)+mi} / (1-q^i)^m  =  h_m(q/(1-q), ..., q^n/(1-q^n)),
/// the right side enumerated as a multiset sum.
inline IdentityReport verify_dilcher(long n, long m, Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::dilcher, .n = n, .m = m, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const RF q = RF::indeterminate();
    Summation<RF> lhs;
    std::vector<RF> xs;
    for (long i = 1; i <= n; ++i) {
        const RF geometric = RF(1) - detail::q_pow(i);
        RF term = detail::gauss(n, i) * RF(detail::alternating(i - 1)) *
                  detail::q_pow(detail::choose2(i) + m * i) / power(geometric, m);
        if (i == n) term = detail::apply_mutation(term, q, mutation);
        lhs.add(term);
        xs.push_back(detail::q_pow(i) / geometric);
    }
    RF rhs = complete_homogeneous<RF>(m, xs);
    auto report = detail::symbolic_report(std::move(params), lhs.value(), std::move(rhs), clock);
    report.details.emplace_back("multiset_terms", multiset_count(n, m).get_str());
    return report;
}

/// sum_{i=0, i!=M}^{n} [n,i] (-1)^{i-1} q^{C(i+1,2)} / (1 - q^{i-M})
///   = (-1)^M q^{C(M+1,2)} [n,M] sum_{i=0, i!=M}^{n} q^{i-M} / (1 - q^{i-M}).
/// Both sums run over i = 0..n.
inline IdentityReport verify_prodinger(long n, long M, Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::prodinger, .n = n, .M = M, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const RF q = RF::indeterminate();
    const long last = M == n ? n - 1 : n;
    Summation<RF> lhs, inner;
    for (long i = 0; i <= n; ++i) {
        if (i == M) continue;
        const RF geometric = RF(1) - detail::q_pow(i - M);
        RF term = detail::gauss(n, i) * RF(detail::alternating(i - 1)) * detail::q_pow(i * (i + 1) / 2) / geometric;
        if (i == last) term = detail::apply_mutation(term, q, mutation);
        lhs.add(term);
        inner.add(detail::q_pow(i - M) / geometric);
    }
    const RF scale = RF(detail::alternating(M)) * detail::q_pow(M * (M + 1) / 2) * detail::gauss(n, M);
    auto report = detail::symbolic_report(std::move(params), lhs.value(), scale * inner.value(), clock);
    report.details.emplace_back("summation_range", "i = 0..n, i != M");
    if (report.status == Status::refuted && mutation == Mutation::none) {
        report.details.emplace_back("flag", "discrepancy under the 0..n upper-limit reading");
    }
    return report;
}

// ---------------------------------------------------------------------------
// General identity with the alphabet (a - b q^i)/(c - z q^i), i = 1..n.

/// Both sides of the general identity over any field F holding q, a, b, c, z.
/// Left: h_tau of the alphabet, tau = m - n + 1, enumerated over multisets.
/// Right: prod_k (c - z q^k) / ((q;q)_n (az - bc)^{n-1}) times
///        sum_i [n,i] (-1)^{i-1} q^{C(i+1,2) - ni} (1 - q^i) (a - bq^i)^m / (c - zq^i)^{tau+1}.
template <Field F>
Sides<F> proposition1_sides(long n, long m, const F& q, const F& a, const F& b, const F& c, const F& z,
                            Mutation mutation = Mutation::none) {
    if (n < 1 || m < n - 1) throw ParameterError("proposition1 requires n >= 1 and m >= n - 1");
    const long tau = m - n + 1;
    const F one(Rational(1));
    const F cross = a * z - b * c;
    if (n >= 2 && cross.is_zero()) throw PoleAtEvaluation("az - bc = 0 collapses the alphabet");
    if (n >= 2 && q.is_zero()) throw PoleAtEvaluation("q = 0 is a pole of the right side");
    const F qfact = pochhammer(q, q, n);
    if (qfact.is_zero()) throw PoleAtEvaluation("(q;q)_n vanishes at this q");

    std::vector<F> xs;
    F qi = one;
    F numerator_prefactor = one;
    Summation<F> sum;
    for (long i = 1; i <= n; ++i) {
        qi = qi * q;
        const F den = c - z * qi;
        if (den.is_zero()) throw PoleAtEvaluation("c - z q^" + std::to_string(i) + " vanishes");
        const F num = a - b * qi;
        xs.push_back(num / den);
        numerator_prefactor = numerator_prefactor * den;
        F term = gauss_binomial_at(n, i, q) * F(detail::alternating(i - 1)) *
                 power(q, i * (i + 1) / 2 - n * i) * (one - qi) * power(num, m) / power(den, tau + 1);
        if (i == n) term = detail::apply_mutation(term, q, mutation);
        sum.add(term);
    }
    const F prefactor = numerator_prefactor / (qfact * power(cross, n - 1));
    return {complete_homogeneous<F>(tau, xs), prefactor * sum.value()};
}

/// Both sides multiplied by q^{C(n,2)} (q;q)_n (az - bc)^{n-1} prod_i (c - zq^i)^tau,
/// which turns them into polynomials in q for rational a, b, c, z.
///
/// The left side h_tau(u_i/d_i) prod d_i^tau is built by the division-free
/// recurrence H[k][j] = d_j^k H[k][j+1] + u_j H[k-1][j] prod_{i>j} d_i.
inline std::pair<QPolynomial, QPolynomial> proposition1_cleared(long n, long m, const Rational& a,
                                                                const Rational& b, const Rational& c,
                                                                const Rational& z,
                                                                Mutation mutation = Mutation::none) {
    if (n < 1 || m < n - 1) throw ParameterError("proposition1 requires n >= 1 and m >= n - 1");
    const long tau = m - n + 1;
    const auto N = static_cast<std::size_t>(n);
    const auto T = static_cast<std::size_t>(tau);
    std::vector<QPolynomial> u(N + 1), d(N + 1);
    for (std::size_t i = 1; i <= N; ++i) {
        u[i] = QPolynomial{a} - QPolynomial::monomial(b, i);
        d[i] = QPolynomial{c} - QPolynomial::monomial(z, i);
    }
    // tail[j] = prod_{i > j} d_i
    std::vector<QPolynomial> tail(N + 2, QPolynomial::one());
    for (std::size_t j = N; j >= 1; --j) tail[j - 1] = tail[j] * d[j];

    // h[k] holds H[k][j] for the current j; start from j = n + 1 (empty alphabet).
    std::vector<QPolynomial> h(T + 1);
    h[0] = QPolynomial::one();
    for (std::size_t j = N; j >= 1; --j) {
        QPolynomial dk = QPolynomial::one();
        for (std::size_t k = 1; k <= T; ++k) {
            dk = dk * d[j];
            h[k] = dk * h[k] + u[j] * h[k - 1] * tail[j];
        }
    }
    const long shift = n * (n - 1) / 2;
    const Rational cross = a * z - b * c;
    QPolynomial lhs = (q_factorial(n) * h[T]).shifted(static_cast<std::size_t>(shift)) *
                      pow(cross, n - 1);

    QPolynomial rhs;
    for (std::size_t i = 1; i <= N; ++i) {
        const long li = static_cast<long>(i);
        QPolynomial term = gauss_binomial(n, li) * detail::alternating(li - 1);
        term = term.shifted(static_cast<std::size_t>(li * (li + 1) / 2 - n * li + shift));
        term = term * (QPolynomial::one() - QPolynomial::monomial(Rational(1), i));
        for (long e = 0; e < m; ++e) term = term * u[i];
        for (std::size_t j = 1; j <= N; ++j) {
            if (j == i) continue;
            for (long e = 0; e <= tau; ++e) term = term * d[j];
        }
        if (i == N) {
            if (mutation == Mutation::flip_sign) term = -term;
            if (mutation == Mutation::shift_exponent) term = term.shifted(1);
        }
        rhs += term;
    }
    return {std::move(lhs), std::move(rhs)};
}

/// Per-symbol degree bounds of the cleared identity: m in a and b,
/// (n-1)(tau+1) in c and z.
inline std::vector<GridSymbol> proposition1_degree_bounds(long n, long m) {
    const long tau = m - n + 1;
    return {{"a", m}, {"b", m}, {"c", (n - 1) * (tau + 1)}, {"z", (n - 1) * (tau + 1)}};
}

/// Symbolic check in Q(q) with a, b, c, z fixed rationals.
inline IdentityReport verify_proposition1(long n, long m, const Rational& a, const Rational& b,
                                          const Rational& c, const Rational& z,
                                          Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::proposition1_general, .n = n, .m = m, .mutation = mutation};
    params.specialization = {{"a", a}, {"b", b}, {"c", c}, {"z", z}};
    params.validate();
    detail::Stopwatch clock;
    auto sides = proposition1_sides<RF>(n, m, RF::indeterminate(), RF(a), RF(b), RF(c), RF(z), mutation);
    auto report = detail::symbolic_report(std::move(params), std::move(sides.lhs), std::move(sides.rhs), clock);
    report.details.emplace_back("multiset_terms", multiset_count(n, m - n + 1).get_str());
    return report;
}

/// Grid proof over a, b, c, z, exact in q at every grid point.
///
/// Both sides are homogeneous of degree tau in (a, b) and of degree -tau in
/// (c, z), and so is the clearing factor, so by default a = c = 1 is fixed and
/// the grid runs over b and z only. `full_grid` grids all four symbols.
/// Samples of different symbols are kept distinct, which keeps az - bc away
/// from zero on the whole grid.
inline IdentityReport verify_proposition1_grid(long n, long m, bool full_grid = false,
                                               Mutation mutation = Mutation::none,
                                               IdentityId id = IdentityId::proposition1_general) {
    IdentityParams params{.id = id, .n = n, .m = m, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const auto all = proposition1_degree_bounds(n, m);
    std::vector<GridSymbol> symbols = full_grid ? all : std::vector<GridSymbol>{all[1], all[3]};
    auto distinct = [](std::size_t, const Rational& v, const std::vector<std::vector<Rational>>& chosen) {
        for (const auto& col : chosen) {
            for (const auto& w : col) {
                if (w == v) return true;
            }
        }
        return false;
    };
    auto agree = [&](const std::vector<Rational>& pt) {
        const Rational a = full_grid ? pt[0] : Rational(1);
        const Rational b = full_grid ? pt[1] : pt[0];
        const Rational c = full_grid ? pt[2] : Rational(1);
        const Rational z = full_grid ? pt[3] : pt[1];
        auto [lhs, rhs] = proposition1_cleared(n, m, a, b, c, z, mutation);
        return lhs == rhs;
    };
    GridProof proof = grid_prove(symbols, agree, distinct);
    if (!full_grid) proof.fixed = {{"a", Rational(1)}, {"c", Rational(1)}};

    IdentityReport r;
    r.params = std::move(params);
    r.status = proof.agreed ? Status::verified : Status::refuted;
    r.grid = std::move(proof);
    r.details.emplace_back("exact_symbol", "q");
    r.details.emplace_back("declared_bounds", "a:" + std::to_string(all[0].degree_bound) +
                                                  " b:" + std::to_string(all[1].degree_bound) +
                                                  " c:" + std::to_string(all[2].degree_bound) +
                                                  " z:" + std::to_string(all[3].degree_bound));
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

/// With (a, b, c, z) = (0, -1, 1, 1) the general identity should collapse to
/// the Dilcher identity with m replaced by tau (Van Hamme when tau = 1); the
/// sides swap, the multiset sum being on the left here. Returns whether both
/// canonical forms coincide.
inline bool proposition1_reproduces_dilcher(long n, long m) {
    const long tau = m - n + 1;
    const auto general = verify_proposition1(n, m, Rational(0), Rational(-1), Rational(1), Rational(1));
    if (tau == 0) return general.lhs == RF(1) && general.rhs == RF(1);
    const auto dilcher = verify_dilcher(n, tau);
    return general.lhs == dilcher.rhs && general.rhs == dilcher.lhs;
}

// ---------------------------------------------------------------------------
// Uchimura's identity with a free parameter y.

/// sum_i [n,i] (-1)^{i-1} q^{C(i+1,2)} / (1 - y q^i)  and
/// sum_{i=1}^{n} q^i (q;q)_{i-1} / (yq;q)_i, over any field holding q and y.
template <Field F>
Sides<F> uchimura_y_sides(long n, const F& q, const F& y, Mutation mutation = Mutation::none) {
    const F one(Rational(1));
    Summation<F> lhs, rhs;
    F qi = one;
    for (long i = 1; i <= n; ++i) {
        qi = qi * q;
        F term = gauss_binomial_at(n, i, q) * F(detail::alternating(i - 1)) * power(q, i * (i + 1) / 2) /
                 (one - y * qi);
        if (i == n) term = detail::apply_mutation(term, q, mutation);
        lhs.add(term);
        rhs.add(qi * pochhammer(q, q, i - 1) / pochhammer(y * q, q, i));
    }
    return {lhs.value(), rhs.value()};
}

/// Upper bound on the q-degree of the y-identity after clearing (yq;q)_n.
inline long uchimura_y_degree_bound(long n, Mutation mutation = Mutation::none) {
    const long full = n * (n + 1) / 2;
    long bound = 0;
    for (long i = 1; i <= n; ++i) {
        bound = std::max(bound, i * (n - i) + i * (i + 1) / 2 + full - i);
        bound = std::max(bound, i + i * (i - 1) / 2 + full - i * (i + 1) / 2);
    }
    return bound + (mutation == Mutation::shift_exponent ? 1 : 0);
}

/// Grid proof in q with both sides exact in Q(y); afterwards checks that
/// y = q^m reproduces the canonical forms of Uchimura's identity, m = 0..5.
inline IdentityReport verify_uchimura_generalized(long n, Mutation mutation = Mutation::none,
                                                  long max_specialization = 5) {
    IdentityParams params{.id = IdentityId::uchimura_generalized_y, .n = n, .mutation = mutation};
    params.validate();
    detail::Stopwatch clock;
    const RF y = RF::indeterminate();
    auto agree = [&](const std::vector<Rational>& pt) {
        auto sides = uchimura_y_sides<RF>(n, RF(pt[0]), y, mutation);
        return sides.lhs == sides.rhs;
    };
    GridProof proof = grid_prove({{"q", uchimura_y_degree_bound(n, mutation)}}, agree);

    bool specializations_hold = true;
    std::string checked;
    for (long m = 0; m <= max_specialization; ++m) {
        const RF q = RF::indeterminate();
        const auto sides = uchimura_y_sides<RF>(n, q, power(q, m), mutation);
        const auto reference = verify_uchimura(n, m);
        if (!(sides.lhs == reference.lhs && sides.rhs == reference.rhs)) specializations_hold = false;
        checked += (m == 0 ? "" : ",") + std::to_string(m);
    }

    IdentityReport r;
    r.params = std::move(params);
    r.status = proof.agreed && specializations_hold ? Status::verified : Status::refuted;
    r.grid = std::move(proof);
    r.details.emplace_back("exact_symbol", "y");
    r.details.emplace_back("specialized_y_eq_q^m", checked);
    r.details.emplace_back("specializations_match", specializations_hold ? "true" : "false");
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// Newton against Lagrange for f(x) = 1/(y - x).

/// Newton side sum_{i=0}^{n-1} R(x, A_i) / R(y, A_{i+1}) and Lagrange side
/// sum_i f(x_i) R(x, A \ x_i) / R(x_i, A \ x_i) with f(t) = 1/(y - t).
template <Field F>
Sides<F> newton_lagrange_sides(const Alphabet<F>& a, const F& y, const F& x,
                               Mutation mutation = Mutation::none) {
    const std::size_t n = a.size();
    Summation<F> newton, lagrange;
    for (std::size_t i = 0; i < n; ++i) {
        F term = r_product<F>(x, a.prefix(i)) / r_product<F>(y, a.prefix(i + 1));
        if (i + 1 == n) term = detail::apply_mutation(term, y, mutation);
        newton.add(term);
        const auto rest = a.without(i);
        const F denom = r_product<F>(a[i], rest);
        if (denom.is_zero()) throw DuplicatePoint("alphabet points coincide");
        lagrange.add(r_product<F>(x, rest) / ((y - a[i]) * denom));
    }
    return {newton.value(), lagrange.value()};
}

/// Three members in Q(y): Newton sum, Lagrange sum, and
/// 1/(y-x) - R(x, A)/(R(y, A)(y - x)). The report holds Newton as lhs and the
/// closed form as rhs; verified iff all three agree and the divided-difference
/// remainder matches R(x, A)/(R(y, A)(y - x)).
inline IdentityReport verify_newton_lagrange_eq7(std::vector<Rational> alphabet, const Rational& x,
                                                 Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::newton_lagrange_eq7, .n = static_cast<long>(alphabet.size()),
                          .mutation = mutation};
    params.specialization = {{"x", x}};
    params.alphabet = alphabet;
    params.validate();
    detail::Stopwatch clock;
    std::vector<RF> pts(alphabet.begin(), alphabet.end());
    const Alphabet<RF> a(std::move(pts));
    const RF y = RF::indeterminate();
    const RF xf(x);
    if (a.contains(xf)) throw DuplicatePoint("x = " + x.to_string() + " lies in the alphabet");
    const auto sides = newton_lagrange_sides<RF>(a, y, xf, mutation);
    const RF rxa = r_product<RF>(xf, a.span());
    const RF ryx = r_product<RF>(y, a.span()) * (y - xf);
    const RF closed = RF(1) / (y - xf) - rxa / ryx;

    std::vector<RF> vals;
    for (const auto& p : a.points()) vals.push_back(RF(1) / (y - p));
    const RF remainder = newton_remainder<RF>(vals, RF(1) / (y - xf), a, xf);

    auto report = detail::symbolic_report(std::move(params), sides.lhs, closed, clock);
    const bool lagrange_ok = sides.rhs == closed;
    const bool remainder_ok = remainder == rxa / ryx;
    if (!lagrange_ok || !remainder_ok) report.status = Status::refuted;
    report.details.emplace_back("exact_symbol", "y");
    report.details.emplace_back("lagrange_matches", lagrange_ok ? "true" : "false");
    report.details.emplace_back("remainder_matches", remainder_ok ? "true" : "false");
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

inline IdentityReport verify_newton_lagrange_eq7(long n, Mutation mutation = Mutation::none) {
    return verify_newton_lagrange_eq7(detail::default_alphabet(n), Rational(7, 3), mutation);
}

/// Newton sum = Lagrange sum at x = 1, in Q(y), for a rational alphabet.
inline IdentityReport verify_eq8_x1(std::vector<Rational> alphabet, Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::eq8_x1, .n = static_cast<long>(alphabet.size()),
                          .mutation = mutation};
    params.alphabet = alphabet;
    params.validate();
    detail::Stopwatch clock;
    std::vector<RF> pts(alphabet.begin(), alphabet.end());
    const Alphabet<RF> a(std::move(pts));
    const bool contains_one = a.contains(RF(1));
    auto sides = newton_lagrange_sides<RF>(a, RF::indeterminate(), RF(1), mutation);
    auto report = detail::symbolic_report(std::move(params), std::move(sides.lhs), std::move(sides.rhs), clock);
    report.details.emplace_back("exact_symbol", "y");
    if (contains_one) report.details.emplace_back("note", "1 lies in the alphabet; R(1, A \\ x_i) vanishes for x_i != 1");
    return report;
}

inline IdentityReport verify_eq8_x1(long n, Mutation mutation = Mutation::none) {
    return verify_eq8_x1(detail::doubling_alphabet(n), mutation);
}

/// {q^{-1}, ..., q^{-n}}: the alphabet with (a, b, c, z) = (1, 0, 0, -1).
template <Field F>
Alphabet<F> inverse_power_alphabet(long n, const F& q) {
    std::vector<F> pts;
    F qi(Rational(1));
    for (long i = 1; i <= n; ++i) {
        qi = qi * q;
        pts.push_back(F(Rational(1)) / qi);
    }
    return Alphabet<F>(std::move(pts));
}

/// {q^M, q^{M-1}, ..., q^{M-n}} without the point q^0 = 1, in Q(q).
inline Alphabet<RF> prodinger_alphabet(long n, long M) {
    std::vector<RF> pts;
    for (long i = 0; i <= n; ++i) {
        if (i != M) pts.push_back(RF::monomial(M - i));
    }
    return Alphabet<RF>(std::move(pts));
}

struct ChainCheck {
    bool lhs_matches = false;
    bool rhs_matches = false;
    bool holds() const { return lhs_matches && rhs_matches; }
};

/// Alphabet q^{-i} with y = q^m, x = 1, in Q(q): the Lagrange side is minus
/// Uchimura's left side and the Newton side is minus the y-form right side,
/// which at y = q^m equals Uchimura's right side.
inline ChainCheck eq8_reproduces_uchimura(long n, long m) {
    const RF q = RF::indeterminate();
    const auto sides = newton_lagrange_sides<RF>(inverse_power_alphabet<RF>(n, q), power(q, m), RF(1));
    const auto reference = verify_uchimura(n, m);
    return {-sides.rhs == *reference.lhs, -sides.lhs == *reference.rhs};
}

/// Same chain at a rational q with y kept symbolic: compares with the y-form.
inline ChainCheck eq8_reproduces_uchimura_y(long n, const Rational& q_value) {
    const RF q(q_value);
    const RF y = RF::indeterminate();
    const auto sides = newton_lagrange_sides<RF>(inverse_power_alphabet<RF>(n, q), y, RF(1));
    const auto reference = uchimura_y_sides<RF>(n, q, y);
    return {-sides.rhs == reference.lhs, -sides.lhs == reference.rhs};
}

/// Prodinger alphabet with y = 1, x = 1. With K = (-1)^M q^{C(M+1,2)} [n,M],
/// -K times the Newton side is Prodinger's right side and -K times the
/// Lagrange side is Prodinger's left side.
inline ChainCheck eq8_reproduces_prodinger(long n, long M) {
    const auto sides = newton_lagrange_sides<RF>(prodinger_alphabet(n, M), RF(1), RF(1));
    const RF scale = RF(detail::alternating(M)) * detail::q_pow(M * (M + 1) / 2) * detail::gauss(n, M);
    const auto reference = verify_prodinger(n, M);
    return {-scale * sides.rhs == *reference.lhs, -scale * sides.lhs == *reference.rhs};
}

// ---------------------------------------------------------------------------

/// sum_i x_i^m / prod_{j!=i}(x_i - x_j) = h_{m-n+1}(x_1..x_n), exactly over Q.
inline IdentityReport verify_power_sum_L5(std::vector<Rational> alphabet, long m,
                                          Mutation mutation = Mutation::none) {
    IdentityParams params{.id = IdentityId::power_sum_L5, .n = static_cast<long>(alphabet.size()), .m = m,
                          .mutation = mutation};
    params.alphabet = alphabet;
    params.validate();
    detail::Stopwatch clock;
    const Alphabet<Rational> a(std::move(alphabet));
    const long n = static_cast<long>(a.size());
    Rational quotient;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational term = pow(a[i], m) / r_product<Rational>(a[i], a.without(i));
        if (i + 1 == a.size()) term = detail::apply_mutation(term, Rational(2), mutation);
        quotient += term;
    }
    std::vector<Rational> vals;
    for (const auto& x : a.points()) vals.push_back(pow(x, m));
    const Rational top = newton_table<Rational>(vals, a).top();
    const Rational h = complete_homogeneous<Rational>(m - n + 1, a.span());
    auto report = detail::symbolic_report(std::move(params), RF(quotient), RF(h), clock);
    report.details.emplace_back("divided_difference_matches", top == h ? "true" : "false");
    if (top != h) report.status = Status::refuted;
    return report;
}

inline IdentityReport verify_power_sum_L5(long n, long m, Mutation mutation = Mutation::none) {
    return verify_power_sum_L5(detail::default_alphabet(n), m, mutation);
}

/// Runs the verifier named by `params`. Library errors become an `error`
/// report carrying the message; parameter errors propagate.
inline IdentityReport verify(const IdentityParams& params) {
    params.validate();
    const Mutation mut = params.mutation;
    auto alphabet = [&](auto fallback) { return params.alphabet.empty() ? fallback(params.n) : params.alphabet; };
    try {
        IdentityReport r;
        switch (params.id) {
            case IdentityId::van_hamme: r = verify_van_hamme(params.n, mut); break;
            case IdentityId::uchimura: r = verify_uchimura(params.n, *params.m, mut); break;
            case IdentityId::dilcher: r = verify_dilcher(params.n, *params.m, mut); break;
            case IdentityId::prodinger: r = verify_prodinger(params.n, *params.M, mut); break;
            case IdentityId::proposition1_general: {
                const auto a = params.value_of("a");
                const auto b = params.value_of("b");
                const auto c = params.value_of("c");
                const auto z = params.value_of("z");
                if (a && b && c && z) {
                    r = verify_proposition1(params.n, *params.m, *a, *b, *c, *z, mut);
                } else {
                    r = verify_proposition1_grid(params.n, *params.m, false, mut);
                    if (mut == Mutation::none) {
                        const bool reduces = proposition1_reproduces_dilcher(params.n, *params.m);
                        r.details.emplace_back("reduces_to_dilcher", reduces ? "true" : "false");
                        if (!reduces) r.status = Status::refuted;
                    }
                }
                break;
            }
            case IdentityId::proposition1_m_eq_n:
                r = verify_proposition1_grid(params.n, params.n, false, mut, IdentityId::proposition1_m_eq_n);
                break;
            case IdentityId::uchimura_generalized_y: r = verify_uchimura_generalized(params.n, mut); break;
            case IdentityId::newton_lagrange_eq7:
                r = verify_newton_lagrange_eq7(alphabet(detail::default_alphabet),
                                               params.value_of("x").value_or(Rational(7, 3)), mut);
                break;
            case IdentityId::eq8_x1: r = verify_eq8_x1(alphabet(detail::doubling_alphabet), mut); break;
            case IdentityId::power_sum_L5:
                r = verify_power_sum_L5(alphabet(detail::default_alphabet), *params.m, mut);
                break;
        }
        r.params = params;
        return r;
    } catch (const ParameterError&) {
        throw;
    } catch (const Error& e) {
        IdentityReport r;
        r.params = params;
        r.status = Status::error;
        r.details.emplace_back("error", e.what());
        return r;
    }
}

}  // namespace qid

#endif  // QID_IDENTITIES_HPP
