#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/diffset.hpp"
#include "cyclo/error.hpp"
#include "cyclo/field.hpp"
#include "cyclo/report.hpp"
#include "cyclo/schur.hpp"
#include "cyclo/search.hpp"

namespace cyclo {

enum class Command { Compute, Verify, Diffset, Search, Survey };

struct RunConfig {
    Command command = Command::Compute;

    std::uint64_t p = 0;
    unsigned n = 1;
    std::optional<std::vector<std::uint64_t>> modulus;
    std::optional<std::uint32_t> generator;
    std::uint64_t ell = 0;

    std::vector<std::string> emit{"a"};
    Format format = Format::Json;
    std::string suite = "all";
    bool modified = false;

    std::uint64_t min_q = 3;
    std::uint64_t max_q = 0;
    bool prime_only = false;

    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t samples = 10'000;
    bool timestamp = false;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2 };

namespace detail {

inline std::vector<std::uint64_t> parse_modulus(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad modulus coefficient '" + tok + "'");
        }
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty modulus");
    return out;
}

inline std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void add_field_options(CLI::App* sub, RunConfig& cfg, std::string& modulus, bool& has_generator,
                              std::uint32_t& generator) {
    sub->add_option("--p", cfg.p, "characteristic (odd prime)")->required();
    sub->add_option("--n", cfg.n, "extension degree")->check(CLI::PositiveNumber);
    sub->add_option("--modulus", modulus, "monic modulus coefficients c0,c1,...,cn");
    sub->add_option("--generator", generator, "generator as a canonical element index")
        ->each([&has_generator](const std::string&) { has_generator = true; });
    sub->add_option("--ell", cfg.ell, "index l of the subgroup of l-th powers")->required()->check(CLI::PositiveNumber);
}

}  // namespace detail

struct ParseResult {
    std::optional<RunConfig> config;
    int exit_code = kExitOk;
};

/// Parses argv into a RunConfig. On --help or a usage error the message is
/// written to out/err and no config is returned.
inline ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string modulus, format = "json", emit = "a";
    bool has_generator = false;
    std::uint32_t generator = 0;

    CLI::App app{"Cyclotomic numbers, cyclotomic matrices and power difference sets over finite fields", "cyclo"};
    app.require_subcommand(1);
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--samples", cfg.samples, "sample count for sampled checks");
    app.add_flag("--timestamp", cfg.timestamp, "include a UTC timestamp in the metadata");
    app.fallthrough();

    auto* compute = app.add_subcommand("compute", "emit the cyclotomic matrix and derived matrices");
    detail::add_field_options(compute, cfg, modulus, has_generator, generator);
    compute->add_option("--emit", emit, "comma list of a,m,b,s,gram");
    compute->add_option("--format", format, "json|csv|pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* verify = app.add_subcommand("verify", "run identity suites and emit a JSON ledger");
    detail::add_field_options(verify, cfg, modulus, has_generator, generator);
    verify->add_option("--suite", cfg.suite, "schur|identities|all")->check(CLI::IsMember({"schur", "identities", "all"}));

    auto* diffset = app.add_subcommand("diffset", "difference-set verdicts and certificates");
    detail::add_field_options(diffset, cfg, modulus, has_generator, generator);
    diffset->add_flag("--modified", cfg.modified, "test K u {0} instead of K");

    auto* search = app.add_subcommand("search", "scan fields for power difference sets (JSON lines)");
    search->add_option("--ell", cfg.ell, "index l")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-q", cfg.max_q, "largest field order")->required();
    search->add_option("--min-q", cfg.min_q, "smallest field order");
    search->add_flag("--prime-only", cfg.prime_only, "prime fields only");

    auto* survey = app.add_subcommand("survey", "column multiset comparison for odd k");
    detail::add_field_options(survey, cfg, modulus, has_generator, generator);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
    }

    if (*compute) cfg.command = Command::Compute;
    if (*verify) cfg.command = Command::Verify;
    if (*diffset) cfg.command = Command::Diffset;
    if (*search) cfg.command = Command::Search;
    if (*survey) cfg.command = Command::Survey;

    try {
        if (!modulus.empty()) cfg.modulus = detail::parse_modulus(modulus);
        if (has_generator) cfg.generator = generator;
        cfg.format = parse_format(format);
        cfg.emit.clear();
        std::stringstream ss(emit);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok != "a" && tok != "m" && tok != "b" && tok != "s" && tok != "gram")
                throw Error(ErrorCode::ParseError, "unknown matrix '" + tok + "' in --emit");
            cfg.emit.push_back(tok);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return {std::nullopt, kExitUsage};
    }
    return {cfg, kExitOk};
}

namespace detail {

inline Json run_meta(const RunConfig& cfg, const Field& f) {
    Json meta{{"field", field_json(f)}, {"ell", cfg.ell}, {"tool_version", kToolVersion}};
    if (cfg.timestamp) meta["timestamp"] = utc_now();
    return meta;
}

inline int run_compute(const RunConfig& cfg, const Cyclotomy& c, std::ostream& out) {
    std::vector<std::pair<std::string, IntMatrix>> ms;
    const bool need_minors = std::any_of(cfg.emit.begin(), cfg.emit.end(), [](const auto& e) { return e != "a" && e != "gram"; });
    std::optional<DerivedMatrices> dm;
    if (need_minors) dm = c.derived();
    for (const auto& e : cfg.emit) {
        if (e == "a") ms.emplace_back("A", c.matrix());
        if (e == "m") ms.emplace_back("M", dm->m);
        if (e == "b") ms.emplace_back("B", dm->b);
        if (e == "s") ms.emplace_back("S", dm->s);
        if (e == "gram") {
            const IntMatrix a = c.matrix();
            ms.emplace_back("A^T A", a.transpose() * a);
        }
    }
    switch (cfg.format) {
        case Format::Csv: out << matrices_csv(ms); break;
        case Format::Pretty: out << matrices_pretty(ms); break;
        case Format::Json: {
            Json mats = Json::object();
            for (std::size_t i = 0; i < ms.size(); ++i) mats[cfg.emit[i]] = ms[i].second;
            Json doc{{"meta", run_meta(cfg, c.field())}, {"k", c.k()}, {"qprime", c.qprime()}, {"matrices", mats}};
            out << doc.dump(2) << "\n";
            break;
        }
    }
    return kExitOk;
}

inline int run_verify(const RunConfig& cfg, const Cyclotomy& c, std::ostream& out) {
    VerifySuiteResult ledger;
    if (cfg.suite == "identities" || cfg.suite == "all") {
        ledger.append(verify_lemma21(c));
        ledger.append(verify_cyclotomy_identities(c));
    }
    if (cfg.suite == "schur" || cfg.suite == "all") {
        Theorem41Options opt;
        opt.seed = cfg.seed;
        opt.samples = cfg.samples;
        ledger.append(verify_schur_suite(c, opt));
    }
    Json doc = ledger;
    doc["meta"] = run_meta(cfg, c.field());
    doc["meta"]["suite"] = cfg.suite;
    out << doc.dump(2) << "\n";
    return ledger.all_pass() ? kExitOk : kExitVerifyFailed;
}

inline int run_diffset(const RunConfig& cfg, const Cyclotomy& c, std::ostream& out) {
    Json doc;
    bool pass = false;
    if (cfg.modified) {
        const auto rep = modified_diffset(c);
        doc = rep;
        pass = rep.all_pass();
    } else {
        const auto rep = analyze_diffset(c);
        doc = rep;
        pass = rep.all_pass();
    }
    doc["meta"] = run_meta(cfg, c.field());
    out << doc.dump(2) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

inline int run_search(const RunConfig& cfg, std::ostream& out) {
    SearchOptions opt;
    opt.ell = cfg.ell;
    opt.min_q = cfg.min_q;
    opt.max_q = cfg.max_q;
    opt.prime_only = cfg.prime_only;
    opt.jobs = cfg.jobs;
    bool pass = true;
    for (const auto& h : search(opt)) {
        out << Json(h).dump() << "\n";
        pass = pass && h.report.all_pass();
    }
    return pass ? kExitOk : kExitVerifyFailed;
}

inline int run_survey(const RunConfig& cfg, const Cyclotomy& c, std::ostream& out) {
    Json doc{{"meta", run_meta(cfg, c.field())}, {"survey", column_permutation_survey(c)}};
    out << doc.dump(2) << "\n";
    return kExitOk;
}

}  // namespace detail

/// Executes one command. Exit codes: 0 clean, 1 usage or configuration error,
/// 2 a verification or certificate failure.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    try {
        if (cfg.command == Command::Search) {
            code = detail::run_search(cfg, out);
        } else {
            FieldOptions fo;
            fo.modulus = cfg.modulus;
            fo.generator = cfg.generator;
            auto f = std::make_shared<const Field>(Field::build(cfg.p, cfg.n, fo));
            const auto c = Cyclotomy::build(f, cfg.ell);
            switch (cfg.command) {
                case Command::Compute: code = detail::run_compute(cfg, c, out); break;
                case Command::Verify: code = detail::run_verify(cfg, c, out); break;
                case Command::Diffset: code = detail::run_diffset(cfg, c, out); break;
                case Command::Survey: code = detail::run_survey(cfg, c, out); break;
                case Command::Search: break;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvariantViolation ? kExitVerifyFailed : kExitUsage;
    }
    out.flush();
    if (!out) {
        err << "error: " << to_string(ErrorCode::IoFailure) << ": output stream failed\n";
        return kExitUsage;
    }
    return code;
}

/// Full entry point used by the executable and by tests.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const auto parsed = parse_args(argc, argv, out, err);
    if (!parsed.config) return parsed.exit_code;
    return run(*parsed.config, out, err);
}

}  // namespace cyclo
