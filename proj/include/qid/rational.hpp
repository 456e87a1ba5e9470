#ifndef QID_RATIONAL_HPP
#define QID_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "qid/errors.hpp"

namespace qid {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Arbitrary precision comes from GMP; every constructor and operator leaves
/// the value canonical, so `==` is structural equality.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT: implicit by design of a numeric type
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class& v) : v_(v) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "p", "-p", "p/q" (q nonzero). Surrounding whitespace is allowed.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos) return std::string_view{};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        };
        text = trim(text);
        if (text.empty()) throw ParseError("empty rational", 0);
        const auto slash = text.find('/');
        auto parse_int = [&](std::string_view s) {
            s = trim(s);
            std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (start == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
            for (std::size_t k = start; k < s.size(); ++k) {
                if (s[k] < '0' || s[k] > '9') {
                    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
                }
            }
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return mpz_class(digits, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        const mpz_class den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    std::string to_string() const { return v_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power; negative exponents invert (and throw on zero base).
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / pow(base, -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

}  // namespace qid

#endif  // QID_RATIONAL_HPP
