#ifndef QID_POLYNOMIAL_HPP
#define QID_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qid/detail/zpoly.hpp"
#include "qid/errors.hpp"
#include "qid/field.hpp"

namespace qid {

template <Field F>
class Polynomial;

namespace detail {
// Integer fast paths for Q[x]; defined below the class.
inline bool integral(const Polynomial<Rational>& p);
inline ZPoly to_integer(const Polynomial<Rational>& p);
inline Polynomial<Rational> from_integer(const ZPoly& z);
}  // namespace detail

/// Dense univariate polynomial over a field.
///
/// Coefficient k multiplies the k-th power of the indeterminate. The vector
/// never ends in a zero, so the zero polynomial is the empty vector and two
/// polynomials are equal iff their coefficient vectors are.
template <Field F>
class Polynomial {
public:
    using value_type = F;

    /// Degree reported for the zero polynomial.
    static constexpr long zero_degree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(const F& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Polynomial monomial(const F& coeff, std::size_t k) {
        if (coeff.is_zero()) return {};
        std::vector<F> c(k + 1, F(Rational(0)));
        c[k] = coeff;
        return Polynomial(std::move(c));
    }
    /// The indeterminate itself.
    static Polynomial identity() { return monomial(F(Rational(1)), 1); }
    static Polynomial one() { return Polynomial(F(Rational(1))); }

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(Rational(1)); }
    const std::vector<F>& coefficients() const noexcept { return c_; }

    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(Rational(0)); }
    const F& leading() const {
        if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Polynomial monic() const {
        if (c_.empty()) return {};
        if (c_.back() == F(Rational(1))) return *this;
        return *this / c_.back();
    }

    F operator()(const F& x) const { return evaluate(x); }

    /// Horner evaluation at a point of the coefficient field.
    F evaluate(const F& x) const {
        F acc(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation in another field G that embeds F.
    template <Field G>
    G evaluate_in(const G& x) const {
        G acc(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + G(*it);
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r;
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    // Schoolbook product. Zero coefficients of the shorter factor are skipped,
    // so multiplying by sparse factors like 1 - z q^k costs O(deg).
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if constexpr (std::is_same_v<F, Rational>) {
            if (detail::integral(a) && detail::integral(b)) {
                return detail::from_integer(detail::mul(detail::to_integer(a), detail::to_integer(b)));
            }
        }
        const Polynomial& outer = a.c_.size() <= b.c_.size() ? a : b;
        const Polynomial& inner = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
        for (std::size_t i = 0; i < outer.c_.size(); ++i) {
            const F& s = outer.c_[i];
            if (s.is_zero()) continue;
            for (std::size_t j = 0; j < inner.c_.size(); ++j) {
                out[i + j] = out[i + j] + s * inner.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial a, const F& s) {
        if (s.is_zero()) return {};
        for (auto& x : a.c_) x = x * s;
        return a;
    }
    friend Polynomial operator*(const F& s, Polynomial a) { return std::move(a) * s; }
    friend Polynomial operator/(Polynomial a, const F& s) {
        if (s.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
        for (auto& x : a.c_) x = x / s;
        return a;
    }

    /// Multiplication by the indeterminate raised to k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> c(k, F(Rational(0)));
        c.insert(c.end(), c_.begin(), c_.end());
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::ostringstream cs;
            cs << c_[k];
            std::string s = cs.str();
            const bool wrap = s.find_first_of("+-/", 1) != std::string::npos;
            if (wrap) s = "(" + s + ")";
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << s;
                continue;
            }
            if (s != "1") os << (s == "-1" ? "-" : s + "*");
            os << var;
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <Field F>
struct DivRem {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

/// Euclidean division: p = quotient * r + remainder, deg(remainder) < deg(r).
template <Field F>
DivRem<F> divrem(const Polynomial<F>& p, const Polynomial<F>& r) {
    if (r.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
    if (p.degree() < r.degree()) return {Polynomial<F>{}, p};
    if constexpr (std::is_same_v<F, Rational>) {
        if (r.leading().is_one() && detail::integral(p) && detail::integral(r)) {
            auto [q, s] = detail::divrem_monic(detail::to_integer(p), detail::to_integer(r));
            return {detail::from_integer(q), detail::from_integer(s)};
        }
    }
    std::vector<F> rem = p.coefficients();
    const auto& d = r.coefficients();
    const std::size_t dn = d.size();
    const F lead = d.back();
    const bool monic = lead == F(Rational(1));
    std::vector<F> quot(rem.size() - dn + 1, F(Rational(0)));
    for (std::size_t k = quot.size(); k-- > 0;) {
        F t = rem[k + dn - 1];
        if (t.is_zero()) continue;
        if (!monic) t = t / lead;
        quot[k] = t;
        for (std::size_t j = 0; j + 1 < dn; ++j) {
            if (!d[j].is_zero()) rem[k + j] = rem[k + j] - t * d[j];
        }
        rem[k + dn - 1] = F(Rational(0));
    }
    rem.resize(dn - 1, F(Rational(0)));
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Quotient of a division that is known to be exact.
template <Field F>
Polynomial<F> exact_quotient(const Polynomial<F>& p, const Polynomial<F>& r) {
    auto [q, s] = divrem(p, r);
    if (!s.is_zero()) throw InternalNonExactDivision("expected exact polynomial division");
    return q;
}

/// Monic gcd by the Euclidean algorithm over the coefficient field.
template <Field F>
Polynomial<F> gcd_euclid(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcd();
    while (!b.is_zero()) {
        auto rem = divrem(a, b).remainder;
        a = std::move(b);
        b = rem.monic();
    }
    return a.monic();
}

namespace detail {

inline bool integral(const Polynomial<Rational>& p) {
    for (const auto& c : p.coefficients()) {
        if (!c.is_integer()) return false;
    }
    return true;
}

inline ZPoly to_integer(const Polynomial<Rational>& p) {
    ZPoly z;
    z.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) z.push_back(c.raw().get_num());
    return z;
}

inline Polynomial<Rational> from_integer(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v);
    return Polynomial<Rational>(std::move(c));
}

/// Primitive integer multiple of p with positive leading coefficient.
inline ZPoly primitive_part(const Polynomial<Rational>& p) {
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    ZPoly z;
    z.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) z.push_back(den / c.raw().get_den() * c.raw().get_num());
    make_primitive(z);
    return z;
}

}  // namespace detail

/// Monic gcd. Over Q the heuristic integer gcd is tried first, falling back
/// to the Euclidean algorithm; other fields use Euclid directly.
template <Field F>
Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcd();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial<F>::one();
    if constexpr (std::is_same_v<F, Rational>) {
        if (auto g = detail::heuristic_gcd(detail::primitive_part(a), detail::primitive_part(b))) {
            return detail::from_integer(*g).monic();
        }
    }
    return gcd_euclid(a, b);
}

}  // namespace qid

#endif  // QID_POLYNOMIAL_HPP
