// Copyright 2026 The sgclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgclone/cloner.hpp"
#include "sgclone/estimation_bounds.hpp"
#include "sgclone/fock_oracle.hpp"
#include "sgclone/verification.hpp"

namespace sgclone::cli {

enum class Command { fidelity, variance, cascade, table, verify_fock, verify_mc, verify_bounds };
enum class Format { text, csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::fidelity;
    std::vector<std::string> counts;  // positional N, M[, L]; "inf" allowed where unbounded fits
    double r = 0.0;
    int cutoff = 0;  // 0: default rule
    int nodes = kDefaultNodes;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::optional<double> tolerance;
    Format format = Format::text;
    unsigned workers = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// printf("%.*g") into a string.
inline std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

namespace detail {

inline int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
}

inline CopyCount parse_count(const std::string& s) {
    if (s == "inf") return unbounded;
    return parse_int(s);
}

inline void expect_counts(const RunConfig& cfg, std::size_t n) {
    if (cfg.counts.size() != n) {
        throw UsageError("expected " + std::to_string(n) + " positional arguments, got " +
                         std::to_string(cfg.counts.size()));
    }
}

inline nlohmann::json count_json(const CopyCount& c) {
    if (c.is_unbounded()) return "inf";
    return c.value();
}

// "0.5 (1/2)"; the rational is shown only when both counts are finite and it is not an integer.
inline std::string text_value(const Rational& v, bool finite) {
    std::string out = format_number(to_double(v), 6);
    if (finite && v.denominator() != 1) out += " (" + to_string(v) + ")";
    return out;
}

inline void emit_report(const VerificationReport& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::json: {
            nlohmann::json j;
            j["checks"] = nlohmann::json::array();
            for (const auto& c : report.checks) {
                j["checks"].push_back({{"name", c.name},
                                       {"expected", c.expected},
                                       {"observed", c.observed},
                                       {"tolerance", c.tolerance},
                                       {"pass", c.pass}});
            }
            j["overall"] = report.overall();
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "name,expected,observed,tolerance,pass\n";
            for (const auto& c : report.checks) {
                out << '"' << c.name << "\"," << format_number(c.expected, 12) << ','
                    << format_number(c.observed, 12) << ',' << format_number(c.tolerance, 12) << ','
                    << (c.pass ? "true" : "false") << '\n';
            }
            break;
        case Format::text:
            for (const auto& c : report.checks) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << ": observed " << format_number(c.observed, 12)
                    << ", expected " << format_number(c.expected, 12) << ", tolerance "
                    << format_number(c.tolerance, 6) << '\n';
            }
            out << "overall: " << (report.overall() ? "PASS" : "FAIL") << '\n';
            break;
    }
}

inline void run_fidelity(const RunConfig& cfg, std::ostream& out) {
    expect_counts(cfg, 2);
    const int n = parse_int(cfg.counts[0]);
    const CopyCount m = parse_count(cfg.counts[1]);
    // Matched squeezed cloners reach the same fidelity on their squeezed family.
    const Fidelity<Rational> f = cfg.r == 0.0 ? optimal_fidelity(n, m)
                                              : fidelity_from_variance(squeezed_variant(n, m, cfg.r).noise());
    switch (cfg.format) {
        case Format::text:
            out << text_value(f.value(), !m.is_unbounded()) << '\n';
            break;
        case Format::csv:
            out << "n,m,fidelity\n" << n << ',' << m.to_string() << ',' << format_number(f.to_double(), 12) << '\n';
            break;
        case Format::json:
            out << nlohmann::json{{"n", n}, {"m", count_json(m)}, {"r", cfg.r}, {"fidelity", f.to_double()},
                                  {"exact", to_string(f.value())}}
                       .dump()
                << '\n';
            break;
    }
}

inline void run_variance(const RunConfig& cfg, std::ostream& out) {
    expect_counts(cfg, 2);
    const int n = parse_int(cfg.counts[0]);
    const CopyCount m = parse_count(cfg.counts[1]);
    const auto cloner = squeezed_variant(n, m, cfg.r);
    const Rational exact = cloner.noise().var_x();
    if (cfg.r == 0.0) {
        switch (cfg.format) {
            case Format::text:
                out << text_value(exact, !m.is_unbounded()) << '\n';
                break;
            case Format::csv:
                out << "n,m,variance\n" << n << ',' << m.to_string() << ',' << format_number(to_double(exact), 12)
                    << '\n';
                break;
            case Format::json:
                out << nlohmann::json{{"n", n}, {"m", count_json(m)}, {"variance", to_double(exact)},
                                      {"exact", to_string(exact)}}
                           .dump()
                    << '\n';
                break;
        }
        return;
    }
    const auto phys = cloner.physical_noise();
    switch (cfg.format) {
        case Format::text:
            out << "var_x " << format_number(phys.var_x(), 6) << ", var_p " << format_number(phys.var_p(), 6)
                << ", product " << to_string(cloner.noise_product()) << '\n';
            break;
        case Format::csv:
            out << "n,m,r,var_x,var_p\n"
                << n << ',' << m.to_string() << ',' << format_number(cfg.r, 12) << ','
                << format_number(phys.var_x(), 12) << ',' << format_number(phys.var_p(), 12) << '\n';
            break;
        case Format::json:
            out << nlohmann::json{{"n", n},
                                  {"m", count_json(m)},
                                  {"r", cfg.r},
                                  {"var_x", phys.var_x()},
                                  {"var_p", phys.var_p()},
                                  {"frame_variance", to_string(exact)},
                                  {"product", to_string(cloner.noise_product())}}
                       .dump()
                << '\n';
            break;
    }
}

inline void run_cascade(const RunConfig& cfg, std::ostream& out) {
    expect_counts(cfg, 3);
    const int n = parse_int(cfg.counts[0]);
    const int m = parse_int(cfg.counts[1]);
    const CopyCount l = parse_count(cfg.counts[2]);
    const Rational composed = cascade(optimal_cloner(n, m), optimal_cloner(m, l)).noise().var_x();
    const Rational optimal = optimal_noise_variance(n, l).var_x();
    const bool match = composed == optimal;
    const bool finite = !l.is_unbounded();
    switch (cfg.format) {
        case Format::text:
            out << "composed " << text_value(composed, finite) << ", optimal " << text_value(optimal, finite)
                << ", match=" << (match ? "true" : "false") << '\n';
            break;
        case Format::csv:
            out << "n,m,l,composed,optimal,match\n"
                << n << ',' << m << ',' << l.to_string() << ',' << format_number(to_double(composed), 12) << ','
                << format_number(to_double(optimal), 12) << ',' << (match ? "true" : "false") << '\n';
            break;
        case Format::json:
            out << nlohmann::json{{"n", n},
                                  {"m", m},
                                  {"l", count_json(l)},
                                  {"composed", to_double(composed)},
                                  {"optimal", to_double(optimal)},
                                  {"match", match}}
                       .dump()
                << '\n';
            break;
    }
}

}  // namespace detail

struct TableRow {
    int n;
    int m;
    Rational variance;
    Rational fidelity;
};

inline std::vector<TableRow> table_rows(int n_max, int m_max) {
    if (n_max < 1 || m_max < n_max) {
        throw UsageError("table needs 1 <= Nmax <= Mmax");
    }
    std::vector<TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (int m = n; m <= m_max; ++m) {
            rows.push_back({n, m, optimal_noise_variance(n, m).var_x(), optimal_fidelity(n, m).value()});
        }
    }
    return rows;
}

/// One row per N <= M pair; CSV header `n,m,variance,fidelity`, 12 significant digits.
inline void emit_table(int n_max, int m_max, Format format, std::ostream& out) {
    const auto rows = table_rows(n_max, m_max);
    switch (format) {
        case Format::csv:
            out << "n,m,variance,fidelity\n";
            for (const auto& r : rows) {
                out << r.n << ',' << r.m << ',' << format_number(to_double(r.variance), 12) << ','
                    << format_number(to_double(r.fidelity), 12) << '\n';
            }
            break;
        case Format::json: {
            auto arr = nlohmann::json::array();
            for (const auto& r : rows) {
                arr.push_back({{"n", r.n},
                               {"m", r.m},
                               {"variance", to_double(r.variance)},
                               {"fidelity", to_double(r.fidelity)},
                               {"variance_exact", to_string(r.variance)},
                               {"fidelity_exact", to_string(r.fidelity)}});
            }
            out << nlohmann::json{{"rows", arr}}.dump(2) << '\n';
            break;
        }
        case Format::text: {
            char line[160];
            std::snprintf(line, sizeof line, "%4s %4s  %-16s %-12s  %-16s %s\n", "n", "m", "variance", "", "fidelity",
                          "");
            out << line;
            for (const auto& r : rows) {
                std::snprintf(line, sizeof line, "%4d %4d  %-16s %-12s  %-16s %s\n", r.n, r.m,
                              format_number(to_double(r.variance), 12).c_str(), to_string(r.variance).c_str(),
                              format_number(to_double(r.fidelity), 12).c_str(), to_string(r.fidelity).c_str());
                out << line;
            }
            break;
        }
    }
}

/// Execute a parsed configuration; data goes to `out`, diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::fidelity:
                detail::run_fidelity(cfg, out);
                return kExitOk;
            case Command::variance:
                detail::run_variance(cfg, out);
                return kExitOk;
            case Command::cascade:
                detail::run_cascade(cfg, out);
                return kExitOk;
            case Command::table:
                detail::expect_counts(cfg, 2);
                emit_table(detail::parse_int(cfg.counts[0]), detail::parse_int(cfg.counts[1]), cfg.format, out);
                return kExitOk;
            case Command::verify_fock:
            case Command::verify_mc:
            case Command::verify_bounds:
                break;
        }
        VerificationReport report;
        if (cfg.command == Command::verify_fock) {
            report = verify_fock({cfg.cutoff, cfg.nodes, kDefaultTruncation, cfg.tolerance});
        } else if (cfg.command == Command::verify_mc) {
            report = verify_monte_carlo({cfg.samples, cfg.seed, 5.0, cfg.workers, cfg.tolerance});
        } else {
            BoundsOptions opt;
            opt.samples = cfg.samples;
            opt.seed = cfg.seed;
            opt.tolerance = cfg.tolerance;
            report = verify_bounds(opt);
        }
        detail::emit_report(report, cfg.format, out);
        return report.overall() ? kExitOk : kExitCheckFailed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const invalid_cloner& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const composition_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

/// Parse argv and run. `--help` prints usage and exits 0.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal symmetric Gaussian cloning of coherent states: formulas and verification", "sgclone"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    double tolerance = 0.0;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--r", cfg.r, "Squeezing parameter of the input family")->capture_default_str();
    app.add_option("--cutoff", cfg.cutoff, "Fock cutoff (0 = automatic)")->check(CLI::Range(0, kMaxCutoff));
    app.add_option("--nodes", cfg.nodes, "Gauss-Hermite nodes per axis")->check(CLI::Range(2, 400))->capture_default_str();
    app.add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::Range(2, 1'000'000'000))->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    auto* tol = app.add_option("--tolerance", tolerance, "Override every non-exact check tolerance")
                    ->check(CLI::NonNegativeNumber);
    app.add_option("--workers", cfg.workers, "Monte Carlo worker threads")->check(CLI::Range(1, 256))->capture_default_str();

    struct Sub {
        const char* name;
        const char* help;
        Command command;
        int positionals;
    };
    const Sub subs[] = {
        {"fidelity", "Optimal N -> M fidelity: fidelity N M", Command::fidelity, 2},
        {"variance", "Optimal N -> M noise variance: variance N M", Command::variance, 2},
        {"cascade", "Compose N -> M and M -> L optimal cloners: cascade N M L", Command::cascade, 3},
        {"table", "Variance/fidelity grid: table Nmax Mmax", Command::table, 2},
        {"verify-fock", "Fock-space oracle checks", Command::verify_fock, 0},
        {"verify-mc", "Monte Carlo measurement checks", Command::verify_mc, 0},
        {"verify-bounds", "Exact identities and measurement bounds", Command::verify_bounds, 0},
    };
    std::vector<CLI::App*> handles;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        if (s.positionals > 0) {
            sub->add_option("counts", cfg.counts, "copy counts ('inf' for unbounded)")
                ->expected(s.positionals)
                ->required();
        }
        handles.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (std::size_t i = 0; i < handles.size(); ++i) {
        if (handles[i]->parsed()) cfg.command = subs[i].command;
    }
    cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    if (tol->count() > 0) cfg.tolerance = tolerance;
    return run(cfg, out, err);
}

}  // namespace sgclone::cli
