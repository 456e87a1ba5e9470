// qid: exact verification of q-series identities from the command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qid/cli.hpp"

namespace {

using qid::cli::RunConfig;

void add_common(CLI::App* cmd, std::string& format, std::optional<unsigned>& jobs) {
    cmd->add_option("--format", format, "json-lines (default), csv or human");
    cmd->add_option("--jobs,-j", jobs, "worker threads (overrides QID_PARALLELISM)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qid: exact verification of q-series identities"};
    app.require_subcommand(1);

    std::string identity, format, n_text, m_text, M_text, points, values, at, mutation = "none";
    std::string a_text, b_text, c_text, z_text, x_text;
    std::optional<unsigned> jobs;
    bool quick = false;

    auto* verify = app.add_subcommand("verify", "verify one identity over parameter ranges");
    verify->add_option("identity", identity, "identity name, e.g. van-hamme, dilcher, proposition1")->required();
    verify->add_option("--n", n_text, "n or A..B");
    verify->add_option("--m", m_text, "m or A..B; endpoints may be n, n+k, n-k");
    verify->add_option("--M", M_text, "M or A..B; endpoints may be n, n+k, n-k");
    verify->add_option("--points", points, "alphabet file, one rational per line");
    verify->add_option("--a", a_text, "value of a (with b, c, z: symbolic check in q)");
    verify->add_option("--b", b_text);
    verify->add_option("--c", c_text);
    verify->add_option("--z", z_text);
    verify->add_option("--x", x_text, "evaluation point x for the Newton/Lagrange identity");
    verify->add_option("--mutation", mutation, "none, flip-sign or shift-exponent");
    add_common(verify, format, jobs);

    auto* sweep = app.add_subcommand("sweep", "run every identity over its acceptance range");
    std::string sweep_target;
    sweep->add_option("target", sweep_target)->required()->check(CLI::IsMember({"all"}));
    sweep->add_flag("--quick", quick, "reduced ranges");
    add_common(sweep, format, jobs);

    auto* table = app.add_subcommand("table", "print both canonical forms of an identity");
    std::string table_target;
    table->add_option("identity", table_target)->required()->check(CLI::IsMember({"dilcher"}));
    table->add_option("--n", n_text)->required();
    table->add_option("--m", m_text)->required();
    table->add_option("--format", format, "human (default), json-lines or csv");

    auto* interp = app.add_subcommand("interp", "Newton and Lagrange interpolants of a value table");
    interp->add_option("--points", points)->required();
    interp->add_option("--values", values)->required();
    interp->add_option("--at", at, "evaluate the interpolant at this rational");
    interp->add_option("--format", format, "human (default), json-lines or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Options write into shared variables, so defaults are resolved per subcommand here.
    if (format.empty()) format = (table->parsed() || interp->parsed()) ? "human" : "json-lines";

    RunConfig cfg;
    try {
        if (const auto f = qid::cli::parse_format(format)) {
            cfg.format = *f;
        } else {
            throw qid::ParameterError("unknown format " + format);
        }
        cfg.parallelism = qid::cli::resolve_parallelism(jobs, std::getenv("QID_PARALLELISM"));
        if (!n_text.empty()) cfg.n = qid::cli::parse_range(n_text);
        if (!m_text.empty()) cfg.m = qid::cli::parse_range(m_text);
        if (!M_text.empty()) cfg.M = qid::cli::parse_range(M_text);
        if (!points.empty()) cfg.input_path = points;
        if (!values.empty()) cfg.values_path = values;
        if (!at.empty()) cfg.at = qid::Rational::parse(at);
        const auto mut = qid::parse_mutation(mutation);
        if (!mut) throw qid::ParameterError("unknown mutation " + mutation);
        cfg.mutation = *mut;
        for (const auto& [name, text] : {std::pair{"a", a_text}, {"b", b_text}, {"c", c_text}, {"z", z_text},
                                         {"x", x_text}}) {
            if (!text.empty()) cfg.specialization.emplace_back(name, qid::Rational::parse(text));
        }

        if (verify->parsed()) {
            cfg.command = qid::cli::Command::verify;
            cfg.identity = qid::parse_identity(identity);
            if (!cfg.identity) throw qid::ParameterError("unknown identity " + identity);
        } else if (sweep->parsed()) {
            cfg.command = qid::cli::Command::sweep;
            cfg.quick = quick;
        } else if (table->parsed()) {
            cfg.command = qid::cli::Command::table;
            cfg.identity = qid::IdentityId::dilcher;
        } else {
            cfg.command = qid::cli::Command::interp;
        }
    } catch (const qid::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    return qid::cli::run(cfg, std::cout, std::cerr);
}
