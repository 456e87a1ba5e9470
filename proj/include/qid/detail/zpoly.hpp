#ifndef QID_DETAIL_ZPOLY_HPP
#define QID_DETAIL_ZPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>


namespace qid::detail {

// Integer polynomials, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void make_primitive(ZPoly& z) {
    mpz_class content = 0;
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (!z.empty() && z.back() < 0) content = -content;
    if (content == 0 || content == 1) return;
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

inline mpz_class max_norm(const ZPoly& p) {
    mpz_class m = 0;
    for (const auto& c : p) {
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
    return m;
}

inline mpz_class horner(const ZPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

// Balanced base-xi digits of h, read back as coefficients.
inline ZPoly from_balanced_digits(mpz_class h, const mpz_class& xi) {
    ZPoly g;
    const mpz_class half = xi / 2;
    mpz_class digit;
    while (h != 0) {
        mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        if (digit > half) digit -= xi;
        g.push_back(digit);
        h -= digit;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    return g;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    const ZPoly& outer = a.size() <= b.size() ? a : b;
    const ZPoly& inner = a.size() <= b.size() ? b : a;
    ZPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (outer[i] == 0) continue;
        for (std::size_t j = 0; j < inner.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), outer[i].get_mpz_t(), inner[j].get_mpz_t());
        }
    }
    trim(out);
    return out;
}

/// Division by a monic divisor stays in Z[x]. Returns {quotient, remainder}.
inline std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& g) {
    if (a.size() < g.size()) return {ZPoly{}, a};
    ZPoly rem = a;
    const std::size_t gn = g.size();
    ZPoly quot(rem.size() - gn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& top = rem[k + gn - 1];
        if (top == 0) continue;
        quot[k] = top;
        for (std::size_t j = 0; j + 1 < gn; ++j) {
            if (g[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), g[j].get_mpz_t());
        }
        top = 0;
    }
    rem.resize(gn - 1);
    trim(rem);
    trim(quot);
    return {std::move(quot), std::move(rem)};
}

/// True iff g divides a in Z[x]. For primitive g this matches divisibility in
/// Q[x] (Gauss's lemma).
inline bool divides(const ZPoly& g, const ZPoly& a) {
    if (g.empty()) return a.empty();
    if (a.size() < g.size()) return a.empty();
    ZPoly rem = a;
    const std::size_t gn = g.size();
    const mpz_class& lead = g.back();
    mpz_class t;
    for (std::size_t k = rem.size() - gn + 1; k-- > 0;) {
        mpz_class& top = rem[k + gn - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j + 1 < gn; ++j) {
            if (g[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), g[j].get_mpz_t());
        }
        top = 0;
    }
    for (std::size_t j = 0; j + 1 < gn; ++j) {
        if (rem[j] != 0) return false;
    }
    return true;
}

/// Heuristic gcd (Char, Geddes and Gonnet): evaluate at a large integer, take
/// the integer gcd, lift it back by balanced digits and accept it only after
/// checking it divides both inputs. Returns nullopt when every attempt fails.
inline std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.size() <= 1 || b.size() <= 1) return ZPoly{1};
    const mpz_class na = max_norm(a);
    const mpz_class nb = max_norm(b);
    mpz_class xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const mpz_class ha = horner(a, xi);
        const mpz_class hb = horner(b, xi);
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), ha.get_mpz_t(), hb.get_mpz_t());
        ZPoly g = from_balanced_digits(h, xi);
        make_primitive(g);
        if (!g.empty() && divides(g, a) && divides(g, b)) return g;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
        mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
        xi = 73794 * xi * root / 27011;
    }
    return std::nullopt;
}

}  // namespace qid::detail

#endif  // QID_DETAIL_ZPOLY_HPP
