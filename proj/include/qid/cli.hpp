#ifndef QID_CLI_HPP
#define QID_CLI_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qid/errors.hpp"
#include "qid/identities.hpp"
#include "qid/interpolation.hpp"
#include "qid/points_file.hpp"
#include "qid/report.hpp"
#include "qid/serialize.hpp"

namespace qid::cli {

enum class Command { verify, sweep, table, interp };
enum class OutputFormat { json_lines, csv, human };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "json-lines" || s == "jsonl" || s == "json") return OutputFormat::json_lines;
    if (s == "csv") return OutputFormat::csv;
    if (s == "human") return OutputFormat::human;
    return std::nullopt;
}

/// Range endpoint: an integer, or n, n+k, n-k (relative to the current n).
struct RangeBound {
    bool relative = false;
    long offset = 0;

    long resolve(long n) const { return relative ? n + offset : offset; }
    friend bool operator==(const RangeBound&, const RangeBound&) = default;
};

struct ParamRange {
    RangeBound lo;
    RangeBound hi;

    bool relative() const { return lo.relative || hi.relative; }
    friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

namespace detail {

inline long parse_long(std::string_view s, std::string_view what) {
    long v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParameterError("cannot read \"" + std::string(what) + "\" as a range endpoint");
    }
    return v;
}

inline RangeBound parse_bound(std::string_view s) {
    if (s.empty()) throw ParameterError("empty range endpoint");
    if (s.front() != 'n') return {false, parse_long(s, s)};
    if (s.size() == 1) return {true, 0};
    if (s[1] != '+' && s[1] != '-') throw ParameterError("cannot read \"" + std::string(s) + "\" as a range endpoint");
    const long k = parse_long(s.substr(2), s);
    return {true, s[1] == '+' ? k : -k};
}

}  // namespace detail

/// "A" or "A..B"; endpoints as in RangeBound.
inline ParamRange parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto b = detail::parse_bound(text);
        return {b, b};
    }
    return {detail::parse_bound(text.substr(0, dots)), detail::parse_bound(text.substr(dots + 2))};
}

/// Values of the range at the given n; throws ParameterError when empty.
inline std::vector<long> expand_range(const ParamRange& r, long n, std::string_view name) {
    const long lo = r.lo.resolve(n);
    const long hi = r.hi.resolve(n);
    if (lo > hi) {
        throw ParameterError("empty range for " + std::string(name) + ": " + std::to_string(lo) + ".." +
                             std::to_string(hi));
    }
    std::vector<long> v;
    for (long k = lo; k <= hi; ++k) v.push_back(k);
    return v;
}

struct RunConfig {
    Command command = Command::verify;
    std::optional<IdentityId> identity;
    std::optional<ParamRange> n;
    std::optional<ParamRange> m;
    std::optional<ParamRange> M;
    std::optional<std::string> input_path;
    std::optional<std::string> values_path;
    std::optional<Rational> at;
    std::vector<std::pair<std::string, Rational>> specialization;
    Mutation mutation = Mutation::none;
    OutputFormat format = OutputFormat::json_lines;
    unsigned parallelism = 1;
    bool quick = false;
};

/// Flag wins over QID_PARALLELISM, which wins over 1.
inline unsigned resolve_parallelism(std::optional<unsigned> flag, const char* env) {
    if (flag) {
        if (*flag == 0) throw ParameterError("--jobs must be positive");
        return *flag;
    }
    if (env != nullptr && *env != '\0') {
        const long v = detail::parse_long(env, env);
        if (v < 1) throw ParameterError("QID_PARALLELISM must be positive");
        return static_cast<unsigned>(v);
    }
    return 1;
}

inline bool uses_m(IdentityId id) {
    switch (id) {
        case IdentityId::uchimura:
        case IdentityId::dilcher:
        case IdentityId::proposition1_general:
        case IdentityId::proposition1_m_eq_n:
        case IdentityId::power_sum_L5:
            return true;
        default:
            return false;
    }
}

inline bool uses_alphabet(IdentityId id) {
    return id == IdentityId::newton_lagrange_eq7 || id == IdentityId::eq8_x1 || id == IdentityId::power_sum_L5;
}

/// Parameter instances of a verify command, validated, in sweep order
/// (n outer, then m, then M).
inline std::vector<IdentityParams> expand_verify(const RunConfig& cfg) {
    if (!cfg.identity) throw ParameterError("verify needs an identity");
    const IdentityId id = *cfg.identity;
    std::vector<Rational> alphabet;
    if (cfg.input_path) {
        if (!uses_alphabet(id)) throw ParameterError("--points applies to alphabet identities only");
        alphabet = ingest_points(*cfg.input_path).points();
    }
    ParamRange n_range;
    if (cfg.n) {
        n_range = *cfg.n;
    } else if (!alphabet.empty()) {
        const long size = static_cast<long>(alphabet.size());
        n_range = {{false, size}, {false, size}};
    } else {
        throw ParameterError("verify needs --n");
    }
    if (n_range.relative()) throw ParameterError("--n cannot refer to n");

    std::vector<IdentityParams> out;
    for (long n : expand_range(n_range, 0, "n")) {
        std::vector<std::optional<long>> ms{std::nullopt};
        if (uses_m(id) && cfg.m) {
            ms.clear();
            for (long v : expand_range(*cfg.m, n, "m")) ms.emplace_back(v);
        }
        std::vector<std::optional<long>> Ms{std::nullopt};
        if (id == IdentityId::prodinger && cfg.M) {
            Ms.clear();
            for (long v : expand_range(*cfg.M, n, "M")) Ms.emplace_back(v);
        }
        for (const auto& m : ms) {
            for (const auto& M : Ms) {
                IdentityParams p{.id = id, .n = n, .m = m, .M = M, .mutation = cfg.mutation};
                p.specialization = cfg.specialization;
                p.alphabet = alphabet;
                p.validate();
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

/// Every identity over its acceptance range; `quick` caps the ranges.
inline std::vector<IdentityParams> sweep_matrix(bool quick) {
    std::vector<IdentityParams> out;
    auto add = [&](IdentityId id, long n, std::optional<long> m = std::nullopt,
                   std::optional<long> M = std::nullopt) {
        out.push_back(IdentityParams{.id = id, .n = n, .m = m, .M = M});
    };
    for (long n = 1; n <= (quick ? 8 : 30); ++n) add(IdentityId::van_hamme, n);
    for (long n = 1; n <= (quick ? 8 : 15); ++n) {
        for (long m = 0; m <= (quick ? 5 : 10); ++m) add(IdentityId::uchimura, n, m);
    }
    for (long n = 1; n <= (quick ? 8 : 12); ++n) {
        for (long m = 1; m <= (quick ? 4 : 6); ++m) add(IdentityId::dilcher, n, m);
    }
    for (long n = 1; n <= (quick ? 8 : 12); ++n) {
        for (long M = 0; M <= n; ++M) add(IdentityId::prodinger, n, std::nullopt, M);
    }
    for (long n = 1; n <= (quick ? 5 : 8); ++n) {
        for (long m = n - 1; m <= n + (quick ? 2 : 4); ++m) add(IdentityId::proposition1_general, n, m);
    }
    for (long n = 1; n <= (quick ? 5 : 8); ++n) add(IdentityId::proposition1_m_eq_n, n, n);
    for (long n = 1; n <= (quick ? 6 : 8); ++n) add(IdentityId::uchimura_generalized_y, n);
    for (long n = 1; n <= 8; ++n) add(IdentityId::newton_lagrange_eq7, n);
    for (long n = 1; n <= 8; ++n) add(IdentityId::eq8_x1, n);
    for (long n = 1; n <= 6; ++n) {
        for (long m = 0; m <= 10; ++m) add(IdentityId::power_sum_L5, n, m);
    }
    return out;
}

/// Runs the instances on `parallelism` workers and hands each report to
/// `emit` in input order, as soon as all earlier ones are done.
inline std::vector<IdentityReport> run_all(const std::vector<IdentityParams>& jobs, unsigned parallelism,
                                           const std::function<void(const IdentityReport&)>& emit = {}) {
    std::vector<std::optional<IdentityReport>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t emitted = 0;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            IdentityReport r = verify(jobs[i]);
            std::lock_guard lock(mu);
            slots[i] = std::move(r);
            while (emitted < slots.size() && slots[emitted]) {
                if (emit) emit(*slots[emitted]);
                ++emitted;
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<IdentityReport> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline int exit_code(const std::vector<IdentityReport>& reports) {
    int code = 0;
    for (const auto& r : reports) {
        if (r.status == Status::error) return 2;
        if (r.status == Status::refuted) code = 1;
    }
    return code;
}

inline void write_report(std::ostream& out, const IdentityReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json_lines: out << emit_json_line(r) << '\n'; break;
        case OutputFormat::csv: out << emit_csv(r) << '\n'; break;
        case OutputFormat::human: out << emit_human(r) << '\n'; break;
    }
    out.flush();
}

namespace detail {

inline int run_reports(const std::vector<IdentityParams>& jobs, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == OutputFormat::csv) out << csv_header() << '\n';
    const auto reports = run_all(jobs, cfg.parallelism,
                                 [&](const IdentityReport& r) { write_report(out, r, cfg.format); });
    return exit_code(reports);
}

inline int run_table(const RunConfig& cfg, std::ostream& out) {
    if (cfg.identity != IdentityId::dilcher) throw ParameterError("table supports dilcher only");
    if (!cfg.n || !cfg.m || cfg.n->relative() || cfg.m->relative() || !(cfg.n->lo == cfg.n->hi) ||
        !(cfg.m->lo == cfg.m->hi)) {
        throw ParameterError("table dilcher needs single values --n N --m M");
    }
    const auto r = verify_dilcher(cfg.n->lo.offset, cfg.m->lo.offset, cfg.mutation);
    if (cfg.format == OutputFormat::human) {
        out << "dilcher n=" << r.params.n << " m=" << *r.params.m << '\n'
            << "multiset terms: " << r.detail("multiset_terms").value_or("?") << '\n'
            << "lhs = " << r.lhs->to_string() << '\n'
            << "rhs = " << r.rhs->to_string() << '\n'
            << "status: " << to_string(r.status) << '\n';
    } else {
        write_report(out, r, cfg.format);
    }
    return exit_code({r});
}

inline int run_interp(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.input_path || !cfg.values_path) throw ParameterError("interp needs --points and --values");
    const auto alphabet = ingest_points(*cfg.input_path);
    const auto values = read_rationals_file(*cfg.values_path);
    if (values.size() != alphabet.size()) {
        throw ParameterError(std::to_string(values.size()) + " values for " + std::to_string(alphabet.size()) +
                             " points");
    }
    if (alphabet.empty()) throw ParameterError("interp needs at least one point");
    const auto table = newton_table<Rational>(values, alphabet);
    const auto newton = newton_interpolant(table, alphabet);
    const auto lagrange = lagrange_interpolant<Rational>(values, alphabet);
    const bool same = newton.poly == lagrange.poly;
    std::optional<Rational> value;
    if (cfg.at) value = newton.poly.evaluate(*cfg.at);

    if (cfg.format == OutputFormat::human) {
        out << "newton:   " << newton.poly.to_string("x") << '\n'
            << "lagrange: " << lagrange.poly.to_string("x") << '\n'
            << "identical: " << (same ? "true" : "false") << '\n';
        out << "divided differences:";
        for (const auto& c : table.newton_coefficients()) out << ' ' << c;
        out << '\n';
        if (value) out << "value at " << *cfg.at << ": " << *value << '\n';
    } else {
        Json o = Json::object();
        o["points"] = ::qid::detail::rationals_to_json(alphabet.points());
        o["newton"] = ::qid::detail::rationals_to_json(newton.poly.coefficients());
        o["lagrange"] = ::qid::detail::rationals_to_json(lagrange.poly.coefficients());
        o["identical"] = same;
        o["divided_differences"] = ::qid::detail::rationals_to_json(table.newton_coefficients());
        if (value) {
            o["at"] = cfg.at->to_string();
            o["value"] = value->to_string();
        }
        out << o.dump() << '\n';
    }
    return same ? 0 : 1;
}

}  // namespace detail

/// Executes a parsed command. Returns the process exit status: 0 when every
/// instance verified, 1 when any was refuted, 2 on usage or input errors.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::verify: return detail::run_reports(expand_verify(cfg), cfg, out);
            case Command::sweep: return detail::run_reports(sweep_matrix(cfg.quick), cfg, out);
            case Command::table: return detail::run_table(cfg, out);
            case Command::interp: return detail::run_interp(cfg, out);
        }
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace qid::cli

#endif  // QID_CLI_HPP
