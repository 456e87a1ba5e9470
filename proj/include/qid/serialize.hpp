#ifndef QID_SERIALIZE_HPP
#define QID_SERIALIZE_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qid/errors.hpp"
#include "qid/grid.hpp"
#include "qid/rational.hpp"
#include "qid/rational_function.hpp"
#include "qid/report.hpp"

namespace qid {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json rationals_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.to_string());
    return a;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> v;
    for (const auto& s : j) v.push_back(Rational::parse(s.get<std::string>()));
    return v;
}

inline Json bindings_to_json(const std::vector<std::pair<std::string, Rational>>& b) {
    Json o = Json::object();
    for (const auto& [k, v] : b) o[k] = v.to_string();
    return o;
}

inline std::vector<std::pair<std::string, Rational>> bindings_from_json(const Json& j) {
    std::vector<std::pair<std::string, Rational>> b;
    for (const auto& [k, v] : j.items()) b.emplace_back(k, Rational::parse(v.get<std::string>()));
    return b;
}

}  // namespace detail

/// {num: [...], den: [...]}, coefficients as exact strings, lowest degree first.
inline Json to_json(const RationalFunction& r) {
    return Json{{"num", detail::rationals_to_json(r.numerator().coefficients())},
                {"den", detail::rationals_to_json(r.denominator().coefficients())}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
    return RationalFunction::normalize(QPolynomial(detail::rationals_from_json(j.at("num"))),
                                       QPolynomial(detail::rationals_from_json(j.at("den"))));
}

inline Json to_json(const IdentityParams& p) {
    Json o = Json::object();
    o["n"] = p.n;
    if (p.m) o["m"] = *p.m;
    if (p.M) o["M"] = *p.M;
    if (!p.specialization.empty()) o["specialization"] = detail::bindings_to_json(p.specialization);
    if (!p.alphabet.empty()) o["alphabet"] = detail::rationals_to_json(p.alphabet);
    if (p.mutation != Mutation::none) o["mutation"] = std::string(to_string(p.mutation));
    return o;
}

inline Json to_json(const GridProof& g) {
    Json o = Json::object();
    o["free_symbols"] = g.free_symbols;
    o["bounds"] = g.degree_bounds;
    std::vector<std::size_t> counts;
    Json samples = Json::array();
    for (const auto& col : g.sample_points) {
        counts.push_back(col.size());
        samples.push_back(detail::rationals_to_json(col));
    }
    o["sample_counts"] = counts;
    o["samples"] = std::move(samples);
    o["pole_rejections"] = g.pole_rejections;
    o["fixed"] = detail::bindings_to_json(g.fixed);
    o["evaluations"] = g.evaluations;
    o["agreed"] = g.agreed;
    if (g.counterexample) o["counterexample"] = detail::rationals_to_json(*g.counterexample);
    return o;
}

inline GridProof grid_from_json(const Json& j) {
    GridProof g;
    g.free_symbols = j.at("free_symbols").get<std::vector<std::string>>();
    g.degree_bounds = j.at("bounds").get<std::vector<long>>();
    for (const auto& col : j.at("samples")) g.sample_points.push_back(detail::rationals_from_json(col));
    g.pole_rejections = j.at("pole_rejections").get<long>();
    g.fixed = detail::bindings_from_json(j.at("fixed"));
    g.evaluations = j.at("evaluations").get<std::size_t>();
    g.agreed = j.at("agreed").get<bool>();
    if (j.contains("counterexample")) g.counterexample = detail::rationals_from_json(j.at("counterexample"));
    return g;
}

inline Json to_json(const IdentityReport& r) {
    Json o = Json::object();
    o["identity"] = std::string(to_string(r.params.id));
    o["params"] = to_json(r.params);
    o["status"] = std::string(to_string(r.status));
    if (r.lhs) o["lhs"] = to_json(*r.lhs);
    if (r.rhs) o["rhs"] = to_json(*r.rhs);
    if (r.grid) o["grid"] = to_json(*r.grid);
    o["elapsed_ms"] = r.elapsed_ms;
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    o["details"] = std::move(details);
    return o;
}

inline IdentityReport report_from_json(const Json& j) {
    IdentityReport r;
    const auto id = parse_identity(j.at("identity").get<std::string>());
    if (!id) throw ParseError("unknown identity " + j.at("identity").dump(), 0);
    r.params.id = *id;
    const Json& p = j.at("params");
    r.params.n = p.at("n").get<long>();
    if (p.contains("m")) r.params.m = p.at("m").get<long>();
    if (p.contains("M")) r.params.M = p.at("M").get<long>();
    if (p.contains("specialization")) r.params.specialization = detail::bindings_from_json(p.at("specialization"));
    if (p.contains("alphabet")) r.params.alphabet = detail::rationals_from_json(p.at("alphabet"));
    if (p.contains("mutation")) {
        const auto m = parse_mutation(p.at("mutation").get<std::string>());
        if (!m) throw ParseError("unknown mutation " + p.at("mutation").dump(), 0);
        r.params.mutation = *m;
    }
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw ParseError("unknown status " + j.at("status").dump(), 0);
    r.status = *status;
    if (j.contains("lhs")) r.lhs = rational_function_from_json(j.at("lhs"));
    if (j.contains("rhs")) r.rhs = rational_function_from_json(j.at("rhs"));
    if (j.contains("grid")) r.grid = grid_from_json(j.at("grid"));
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("details")) {
        for (const auto& [k, v] : j.at("details").items()) r.details.emplace_back(k, v.get<std::string>());
    }
    return r;
}

/// One json-lines record (no trailing newline).
inline std::string emit_json_line(const IdentityReport& r) { return to_json(r).dump(); }

inline IdentityReport parse_json_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), 0);
    }
    return report_from_json(j);
}

inline std::string csv_header() { return "identity,n,m,M,mutation,status,elapsed_ms,lhs,rhs,grid_evaluations"; }

inline std::string emit_csv(const IdentityReport& r) {
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream os;
    os << to_string(r.params.id) << ',' << r.params.n << ',' << (r.params.m ? std::to_string(*r.params.m) : "")
       << ',' << (r.params.M ? std::to_string(*r.params.M) : "") << ',' << to_string(r.params.mutation) << ','
       << to_string(r.status) << ',' << r.elapsed_ms << ',' << (r.lhs ? quoted(r.lhs->to_string()) : "") << ','
       << (r.rhs ? quoted(r.rhs->to_string()) : "") << ','
       << (r.grid ? std::to_string(r.grid->evaluations) : "");
    return os.str();
}

inline std::string emit_human(const IdentityReport& r) {
    std::ostringstream os;
    os << to_string(r.params.id) << " n=" << r.params.n;
    if (r.params.m) os << " m=" << *r.params.m;
    if (r.params.M) os << " M=" << *r.params.M;
    for (const auto& [k, v] : r.params.specialization) os << ' ' << k << '=' << v;
    if (r.params.mutation != Mutation::none) os << " mutation=" << to_string(r.params.mutation);
    os << ": " << to_string(r.status) << " (" << r.elapsed_ms << " ms)";
    const std::string var = r.detail("exact_symbol").value_or("q");
    if (r.lhs) os << "\n  lhs = " << r.lhs->to_string(var);
    if (r.rhs) os << "\n  rhs = " << r.rhs->to_string(var);
    if (r.grid) {
        os << "\n  grid:";
        for (std::size_t k = 0; k < r.grid->free_symbols.size(); ++k) {
            os << ' ' << r.grid->free_symbols[k] << "<=" << r.grid->degree_bounds[k] << " ("
               << r.grid->sample_points[k].size() << " samples)";
        }
        for (const auto& [k, v] : r.grid->fixed) os << ' ' << k << '=' << v;
        os << ", " << r.grid->evaluations << " evaluations, " << r.grid->pole_rejections << " pole rejections";
    }
    for (const auto& [k, v] : r.details) os << "\n  " << k << ": " << v;
    return os.str();
}

}  // namespace qid

#endif  // QID_SERIALIZE_HPP
