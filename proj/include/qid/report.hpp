#ifndef QID_REPORT_HPP
#define QID_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qid/errors.hpp"
#include "qid/grid.hpp"
#include "qid/rational.hpp"
#include "qid/rational_function.hpp"

namespace qid {

enum class IdentityId {
    van_hamme,
    uchimura,
    dilcher,
    prodinger,
    proposition1_general,
    proposition1_m_eq_n,
    uchimura_generalized_y,
    newton_lagrange_eq7,
    eq8_x1,
    power_sum_L5,
};

inline constexpr std::array<std::pair<IdentityId, std::string_view>, 10> kIdentityNames{{
    {IdentityId::van_hamme, "van_hamme"},
    {IdentityId::uchimura, "uchimura"},
    {IdentityId::dilcher, "dilcher"},
    {IdentityId::prodinger, "prodinger"},
    {IdentityId::proposition1_general, "proposition1_general"},
    {IdentityId::proposition1_m_eq_n, "proposition1_m_eq_n"},
    {IdentityId::uchimura_generalized_y, "uchimura_generalized_y"},
    {IdentityId::newton_lagrange_eq7, "newton_lagrange_eq7"},
    {IdentityId::eq8_x1, "eq8_x1"},
    {IdentityId::power_sum_L5, "power_sum_L5"},
}};

inline std::string_view to_string(IdentityId id) {
    for (const auto& [k, name] : kIdentityNames) {
        if (k == id) return name;
    }
    return "unknown";
}

/// Accepts the canonical names plus the hyphenated CLI spellings
/// ("van-hamme", "proposition1", "uchimura-y", ...).
inline std::optional<IdentityId> parse_identity(std::string_view text) {
    std::string s(text);
    for (auto& ch : s) {
        if (ch == '-') ch = '_';
    }
    for (const auto& [k, name] : kIdentityNames) {
        if (s == name) return k;
    }
    if (s == "proposition1" || s == "prop1") return IdentityId::proposition1_general;
    if (s == "uchimura_y") return IdentityId::uchimura_generalized_y;
    if (s == "eq7") return IdentityId::newton_lagrange_eq7;
    if (s == "eq8") return IdentityId::eq8_x1;
    if (s == "power_sum_l5" || s == "l5" || s == "power_sum") return IdentityId::power_sum_L5;
    return std::nullopt;
}

/// Deliberate corruption of one term, used to check that verifiers refute.
enum class Mutation { none, flip_sign, shift_exponent };

inline std::string_view to_string(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::flip_sign: return "flip_sign";
        case Mutation::shift_exponent: return "shift_exponent";
    }
    return "none";
}

inline std::optional<Mutation> parse_mutation(std::string_view s) {
    if (s == "none") return Mutation::none;
    if (s == "flip_sign" || s == "flip-sign") return Mutation::flip_sign;
    if (s == "shift_exponent" || s == "shift-exponent") return Mutation::shift_exponent;
    return std::nullopt;
}

struct IdentityParams {
    IdentityId id = IdentityId::van_hamme;
    long n = 1;
    std::optional<long> m;
    std::optional<long> M;
    /// Values for a, b, c, z, y or x where an identity has them.
    std::vector<std::pair<std::string, Rational>> specialization;
    /// Interpolation points for the alphabet identities; empty means default.
    std::vector<Rational> alphabet;
    Mutation mutation = Mutation::none;

    std::optional<Rational> value_of(std::string_view symbol) const {
        for (const auto& [k, v] : specialization) {
            if (k == symbol) return v;
        }
        return std::nullopt;
    }

    /// Throws ParameterError when the parameters are outside the identity's range.
    void validate() const {
        const std::string name(to_string(id));
        auto need_m = [&]() -> long {
            if (!m) throw ParameterError(name + " requires m");
            return *m;
        };
        if (n < 1) throw ParameterError(name + " requires n >= 1");
        switch (id) {
            case IdentityId::van_hamme:
            case IdentityId::uchimura_generalized_y:
            case IdentityId::newton_lagrange_eq7:
            case IdentityId::eq8_x1:
                break;
            case IdentityId::uchimura:
                if (need_m() < 0) throw ParameterError("uchimura requires m >= 0");
                break;
            case IdentityId::dilcher:
                if (need_m() < 1) throw ParameterError("dilcher requires m >= 1");
                break;
            case IdentityId::prodinger:
                if (!M) throw ParameterError("prodinger requires M");
                if (*M < 0 || *M > n) throw ParameterError("prodinger requires 0 <= M <= n");
                break;
            case IdentityId::proposition1_general:
                if (need_m() < n - 1) throw ParameterError("proposition1 requires m >= n - 1");
                break;
            case IdentityId::proposition1_m_eq_n:
                if (m && *m != n) throw ParameterError("proposition1_m_eq_n requires m = n");
                break;
            case IdentityId::power_sum_L5:
                if (need_m() < 0) throw ParameterError("power_sum_L5 requires m >= 0");
                break;
        }
        if (!alphabet.empty() && static_cast<long>(alphabet.size()) != n) {
            throw ParameterError("alphabet has " + std::to_string(alphabet.size()) +
                                 " points but n = " + std::to_string(n));
        }
    }

    friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

enum class Status { verified, refuted, error };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::refuted: return "refuted";
        case Status::error: return "error";
    }
    return "error";
}

inline std::optional<Status> parse_status(std::string_view s) {
    if (s == "verified") return Status::verified;
    if (s == "refuted") return Status::refuted;
    if (s == "error") return Status::error;
    return std::nullopt;
}

/// Outcome of one verification. In symbolic mode lhs/rhs hold the canonical
/// forms; in grid mode `grid` holds the proof record instead.
struct IdentityReport {
    IdentityParams params;
    Status status = Status::error;
    std::optional<RationalFunction> lhs;
    std::optional<RationalFunction> rhs;
    std::optional<GridProof> grid;
    /// Extra facts (term counts, checked specializations, flagged discrepancies).
    std::vector<std::pair<std::string, std::string>> details;
    double elapsed_ms = 0.0;

    bool verified() const noexcept { return status == Status::verified; }

    std::optional<std::string> detail(std::string_view key) const {
        for (const auto& [k, v] : details) {
            if (k == key) return v;
        }
        return std::nullopt;
    }

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

}  // namespace qid

#endif  // QID_REPORT_HPP
