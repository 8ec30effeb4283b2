#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pjet/bound.hpp"
#include "pjet/chow.hpp"
#include "pjet/delta.hpp"
#include "pjet/errors.hpp"
#include "pjet/jetspace.hpp"
#include "pjet/parse.hpp"
#include "pjet/serialize.hpp"

namespace pjet::cli {

// Exit codes: 0 success, 1 user error, 2 broken internal invariant.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternalError = 2;

namespace detail {

inline BigInt parse_bigint(const std::string& s, const std::string& what) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw InvalidInput(what + ": '" + s + "' is not a decimal integer");
    }
    return BigInt(s);
}

// One polynomial per line; '#' starts a comment; blank lines are skipped.
inline std::vector<Polynomial> load_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open generators file '" + path + "'");
    std::vector<Polynomial> gens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            gens.push_back(parse_polynomial(line));
        } catch (const SyntaxError& e) {
            throw SyntaxError(path + ":" + std::to_string(lineno) + ": " + e.what(), lineno,
                              e.column());
        }
    }
    return gens;
}

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config file '" + path + "'");
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw InvalidInput("config file '" + path + "' is not valid JSON");
    return doc;
}

inline void print_report(const BoundReport& report, const std::string& format,
                         std::ostream& out) {
    if (format == "json") {
        out << to_json(report).dump() << "\n";
        return;
    }
    out << "p = " << report.p << ", n = " << report.n << ", d = " << report.d << "\n";
    out << "interior degree   = " << report.interior.str() << "\n";
    out << "coset constant    = " << report.coset_constant.str() << " (p^n)\n";
    out << "translate factor  = " << report.translate_factor.str() << " (p^{2n} * 3^n * n!)\n";
    out << "bound             = " << report.bound.str() << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    for (const auto& a : report.assumptions) out << "assumes: " << a << "\n";
}

} // namespace detail

// Runs one CLI invocation. `args` excludes the program name. All output
// goes to the supplied streams; nothing is read from the environment.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact p-derivation calculus, jet-algebra presentations, and torsion-coset bounds"};
    app.require_subcommand(1);

    // ---- delta ----
    auto* cmd_delta = app.add_subcommand("delta", "apply the p-derivation to an expression");
    std::uint64_t delta_p = 0;
    std::string delta_expr;
    unsigned delta_iterations = 1;
    std::string delta_format = "text";
    cmd_delta->add_option("--p", delta_p, "odd prime")->required();
    cmd_delta->add_option("--expr", delta_expr, "polynomial expression")->required();
    cmd_delta->add_option("--iter", delta_iterations, "number of applications (default 1)");
    cmd_delta->add_option("--format", delta_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- jet ----
    auto* cmd_jet = app.add_subcommand("jet", "build a jet-algebra presentation");
    std::uint64_t jet_p = 0;
    unsigned jet_order = 0;
    std::string jet_gens_path;
    std::string jet_format = "json";
    cmd_jet->add_option("--p", jet_p, "odd prime")->required();
    cmd_jet->add_option("--order", jet_order, "jet order r >= 0")->required();
    cmd_jet->add_option("--gens", jet_gens_path, "generators file, one polynomial per line")
        ->required();
    cmd_jet->add_option("--format", jet_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- segre ci ----
    auto* cmd_segre = app.add_subcommand("segre", "characteristic-class series");
    cmd_segre->require_subcommand(1);
    auto* cmd_segre_ci =
        cmd_segre->add_subcommand("ci", "cotangent Segre series of a complete intersection");
    unsigned segre_n = 0, segre_c = 0;
    std::uint64_t segre_p = 0;
    std::string segre_format = "text";
    cmd_segre_ci->add_option("--n", segre_n, "ambient dimension")->required();
    cmd_segre_ci->add_option("--c", segre_c, "number of hypersurfaces")->required();
    cmd_segre_ci->add_option("--p", segre_p, "odd prime")->required();
    cmd_segre_ci->add_option("--format", segre_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- bound ----
    auto* cmd_bound = app.add_subcommand("bound", "torsion-coset bounds");
    cmd_bound->require_subcommand(1);

    auto* cmd_bound_curve = cmd_bound->add_subcommand("curve", "genus-g curve in its Jacobian");
    std::uint64_t curve_p = 0;
    unsigned curve_genus = 0;
    std::string curve_format = "json";
    cmd_bound_curve->add_option("--p", curve_p, "odd prime with p > 2g")->required();
    cmd_bound_curve->add_option("--genus", curve_genus, "genus g >= 2")->required();
    cmd_bound_curve->add_option("--format", curve_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_bound_ci =
        cmd_bound->add_subcommand("ci", "complete intersection of hypersurfaces");
    std::uint64_t ci_p = 0;
    std::string ci_config_path;
    std::string ci_format = "json";
    auto* ci_p_opt = cmd_bound_ci->add_option("--p", ci_p, "odd prime (may also come from the config)");
    cmd_bound_ci->add_option("--config", ci_config_path, "intersection-table config JSON")
        ->required();
    cmd_bound_ci->add_option("--format", ci_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_bound_general =
        cmd_bound->add_subcommand("general", "bound from an explicit Segre degree vector");
    std::uint64_t general_p = 0;
    unsigned general_n = 0, general_d = 0;
    std::string general_segre;
    std::string general_format = "json";
    cmd_bound_general->add_option("--p", general_p, "odd prime")->required();
    cmd_bound_general->add_option("--n", general_n, "ambient abelian dimension")->required();
    cmd_bound_general->add_option("--d", general_d, "dimension of X")->required();
    cmd_bound_general
        ->add_option("--segre", general_segre, "comma-separated degrees N0,...,Nd")
        ->required();
    cmd_bound_general->add_option("--format", general_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUserError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUserError;
    }

    try {
        if (cmd_delta->parsed()) {
            DeltaContext ctx(delta_p);
            if (delta_iterations < 1) {
                throw InvalidInput("--iter must be >= 1");
            }
            Polynomial f = parse_polynomial(delta_expr);
            Polynomial result = delta_iter(f, ctx, delta_iterations);
            if (delta_format == "json") {
                Json doc;
                doc["p"] = delta_p;
                doc["iter"] = delta_iterations;
                doc["result"] = result.str();
                out << doc.dump() << "\n";
            } else {
                out << result.str() << "\n";
            }
        } else if (cmd_jet->parsed()) {
            DeltaContext ctx(jet_p);
            std::vector<Polynomial> gens = detail::load_generators(jet_gens_path);
            JetPresentation pres = jet_presentation(gens, ctx, jet_order);
            if (jet_format == "json") {
                out << to_json(pres).dump() << "\n";
            } else {
                out << "p = " << pres.p << ", r = " << pres.r << "\n";
                out << "base vars:";
                for (const Variable& v : pres.base_vars) out << " " << v.str();
                out << "\n";
                for (std::size_t i = 0; i < pres.slices.size(); ++i) {
                    for (std::size_t j = 0; j < pres.slices[i].size(); ++j) {
                        out << "G[" << i << "][" << j << "] = " << pres.slices[i][j].str() << "\n";
                    }
                }
            }
        } else if (cmd_segre_ci->parsed()) {
            if (segre_c < 1 || segre_c > segre_n) {
                throw InvalidInput("segre ci: need 1 <= c <= n");
            }
            std::vector<DivisorSymbol> symbols;
            symbols.emplace_back("theta");
            std::vector<DivisorSymbol> hyps;
            for (unsigned j = 1; j <= segre_c; ++j) {
                hyps.emplace_back("h" + std::to_string(j));
                symbols.push_back(hyps.back());
            }
            DeltaContext ctx(segre_p); // validates the prime
            AmbientSpec ambient(segre_n, symbols);
            ChernSeries series = ci_cotangent_segre(ambient, hyps, ctx.p());
            if (segre_format == "json") {
                out << to_json(series).dump() << "\n";
            } else {
                out << "n = " << segre_n << ", c = " << segre_c << ", p = " << segre_p
                    << ", truncation = " << series.truncation() << "\n";
                for (unsigned i = 0; i <= series.truncation(); ++i) {
                    out << "s[" << i << "] = " << series.component(i).str() << "\n";
                }
            }
        } else if (cmd_bound_curve->parsed()) {
            detail::print_report(buium_curve_bound(curve_p, curve_genus), curve_format, out);
        } else if (cmd_bound_ci->parsed()) {
            Json config = detail::load_json(ci_config_path);
            std::uint64_t p = 0;
            if (!ci_p_opt->empty()) {
                p = ci_p;
                if (config.contains("p")) {
                    BigInt config_p = detail::bigint_from_json(config["p"], "config p");
                    if (config_p != BigInt(p)) {
                        throw InvalidInput("--p disagrees with the config file's p");
                    }
                }
            } else if (config.contains("p")) {
                BigInt config_p = detail::bigint_from_json(config["p"], "config p");
                if (config_p < 3 || config_p > BigInt("18446744073709551615")) {
                    throw InvalidInput("config p out of range");
                }
                p = config_p.convert_to<std::uint64_t>();
            } else {
                throw InvalidInput("prime p required: pass --p or put \"p\" in the config");
            }
            IntersectionTable table = intersection_table_from_json(config);
            if (!config.contains("hypersurfaces") || !config["hypersurfaces"].is_array()) {
                throw InvalidInput("config: expected a \"hypersurfaces\" array");
            }
            std::vector<DivisorSymbol> hyps;
            for (const auto& h : config["hypersurfaces"]) {
                if (!h.is_string()) throw InvalidInput("config: hypersurfaces must be strings");
                hyps.emplace_back(h.get<std::string>());
                table.ambient().require_index(hyps.back().name);
            }
            detail::print_report(complete_intersection_bound(p, table.ambient(), hyps, table),
                                 ci_format, out);
        } else if (cmd_bound_general->parsed()) {
            SegreDegreeVector segre;
            std::stringstream ss(general_segre);
            std::string item;
            while (std::getline(ss, item, ',')) {
                segre.entries.push_back(detail::parse_bigint(item, "--segre entry"));
            }
            if (segre.entries.size() != static_cast<std::size_t>(general_d) + 1) {
                throw InvalidInput("--segre needs exactly d + 1 = " +
                                   std::to_string(general_d + 1) + " entries, got " +
                                   std::to_string(segre.entries.size()));
            }
            detail::print_report(theorem_b_bound(general_p, general_n, general_d, segre),
                                 general_format, out);
        }
    } catch (const InternalError& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const Error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        err << "error[InternalError]: unexpected exception: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitOk;
}

} // namespace pjet::cli
