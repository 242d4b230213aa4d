// Command-line interface to the gamma library.
//
// Exit codes: 0 success, 1 usage or input error, 2 guard refusal,
// 3 verification failure.  The environment variable GAMMA_GUARD (an
// integer) overrides every guard default; a --guard flag overrides both.

#include "gamma/gamma.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_refusal = 2;
constexpr int exit_verify_failed = 3;

struct Guards {
    int enumeration = gamma_m::default_enumeration_guard;
    int partitions = gamma_m::default_partitions_guard;
    int determinant = gamma_m::default_determinant_guard;
};

// Precedence: --guard flag, then GAMMA_GUARD, then the library defaults.
Guards resolve_guards(const std::optional<int>& flag) {
    Guards g;
    if (const char* env = std::getenv("GAMMA_GUARD")) {
        try {
            int value = std::stoi(env);
            g.enumeration = g.partitions = g.determinant = value;
        } catch (const std::exception&) {
            throw std::invalid_argument("GAMMA_GUARD is not an integer: '" + std::string(env) +
                                        "'");
        }
    }
    if (flag) g.enumeration = g.partitions = g.determinant = *flag;
    return g;
}

void emit_element(const gamma_m::RingElement& value, const std::string& format) {
    if (format == "json")
        std::cout << gamma_m::element_to_json(value).dump() << "\n";
    else
        std::cout << gamma_m::to_text(value) << "\n";
}

gamma_m::json suites_to_json(const std::vector<gamma_m::SuiteResult>& suites) {
    gamma_m::json arr = gamma_m::json::array();
    bool ok = true;
    for (const auto& s : suites) {
        ok = ok && s.ok();
        gamma_m::json one;
        one["name"] = s.name;
        one["passed"] = s.passed;
        one["failed"] = s.failed;
        one["failures"] = s.failures;
        arr.push_back(std::move(one));
    }
    gamma_m::json out;
    out["suites"] = std::move(arr);
    out["ok"] = ok;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in truncated symmetric-function rings"};
    // --h is a real option on several subcommands, so keep help on --help only
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::optional<int> guard_flag;
    int m = 0, p = 0, n = 0;
    std::string h_text, e_text, alpha_text, beta_text, lambda_text;
    std::string target_text, left_text, right_text, kostka_path;
    bool list_witnesses = false;
    int max_degree = 8, trials = 200;
    std::uint64_t seed = 12345;
    std::string oracle = "all";

    std::function<int()> action;

    CLI::App* expand = app.add_subcommand("expand-e", "Canonical form of e_n");
    expand->add_option("--m", m, "Truncation modulus")->required();
    expand->add_option("--n", n, "Degree")->required();
    expand->add_option("--guard", guard_flag, "Guard override");
    add_format(expand);
    expand->callback([&] {
        action = [&]() {
            emit_element(gamma_m::expand_e(n, m, resolve_guards(guard_flag).partitions), format);
            return exit_ok;
        };
    });

    CLI::App* straighten = app.add_subcommand("straighten", "Canonical form of h_alpha e_beta");
    straighten->add_option("--m", m, "Truncation modulus")->required();
    straighten->add_option("--h", h_text, "h-part composition (empty for none)");
    straighten->add_option("--e", e_text, "e-part composition (empty for none)");
    std::string via = "direct";
    straighten->add_option("--via", via, "Computation route")
        ->check(CLI::IsMember({"direct", "product"}))
        ->capture_default_str();
    straighten->add_option("--guard", guard_flag, "Guard override");
    add_format(straighten);
    straighten->callback([&] {
        action = [&]() {
            int guard = resolve_guards(guard_flag).partitions;
            gamma_m::Composition alpha = gamma_m::Composition::parse(h_text);
            gamma_m::Composition beta = gamma_m::Composition::parse(e_text);
            gamma_m::RingElement value = via == "product"
                                           ? gamma_m::straighten_product(alpha, beta, m, guard)
                                           : gamma_m::straighten_direct(alpha, beta, m, guard);
            emit_element(value, format);
            return exit_ok;
        };
    });

    CLI::App* coeff = app.add_subcommand("coeff", "One coefficient of h_alpha e_beta");
    coeff->add_option("--m", m, "Truncation modulus")->required();
    coeff->add_option("--h", h_text, "h-part composition");
    coeff->add_option("--e", e_text, "e-part composition");
    coeff->add_option("--target", target_text, "Basis pair 'lambda|m*mu'")->required();
    coeff->add_option("--guard", guard_flag, "Guard override");
    add_format(coeff);
    coeff->callback([&] {
        action = [&]() {
            gamma_m::RingElement value = gamma_m::straighten_direct(
                gamma_m::Composition::parse(h_text), gamma_m::Composition::parse(e_text), m,
                resolve_guards(guard_flag).partitions);
            gamma_m::Int c = gamma_m::coefficient(value, gamma_m::PairPartition::parse(target_text, m));
            if (format == "json") {
                gamma_m::json out;
                out["coeff"] = c.str();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << c.str() << "\n";
            }
            return exit_ok;
        };
    });

    CLI::App* count = app.add_subcommand(
        "count-cm", "Count rearrangements with no prefix sum divisible by m");
    count->add_option("--m", m, "Truncation modulus")->required();
    count->add_option("--lambda", lambda_text, "Partition");
    count->add_flag("--list", list_witnesses, "Also enumerate the witnesses");
    count->add_option("--guard", guard_flag, "Enumeration guard override");
    add_format(count);
    count->callback([&] {
        action = [&]() {
            gamma_m::Partition lambda = gamma_m::Partition::parse(lambda_text);
            gamma_m::Int c = gamma_m::count_good_compositions(lambda, m);
            std::vector<gamma_m::Composition> witnesses;
            if (list_witnesses) {
                for (gamma_m::Composition& comp : gamma_m::enumerate_rearrangements(
                         lambda, resolve_guards(guard_flag).enumeration)) {
                    int prefix = 0;
                    bool good = true;
                    for (int part : comp.parts()) {
                        prefix += part;
                        if (prefix % m == 0) {
                            good = false;
                            break;
                        }
                    }
                    if (good) witnesses.push_back(std::move(comp));
                }
            }
            if (format == "json") {
                gamma_m::json out;
                out["count"] = c.str();
                if (list_witnesses) {
                    gamma_m::json arr = gamma_m::json::array();
                    for (const gamma_m::Composition& w : witnesses) arr.push_back(w.parts());
                    out["witnesses"] = std::move(arr);
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << c.str() << "\n";
                for (const gamma_m::Composition& w : witnesses) std::cout << w.str() << "\n";
            }
            return exit_ok;
        };
    });

    CLI::App* canonical =
        app.add_subcommand("canonical", "Canonical summand label of M(alpha|beta)");
    canonical->add_option("--p", p, "Odd prime")->required();
    canonical->add_option("--alpha", alpha_text, "h-part composition");
    canonical->add_option("--beta", beta_text, "e-part composition");
    add_format(canonical);
    canonical->callback([&] {
        action = [&]() {
            gamma_m::PairPartition pair = gamma_m::canonical_summand(
                gamma_m::Composition::parse(alpha_text), gamma_m::Composition::parse(beta_text), p);
            if (format == "json") {
                gamma_m::json out;
                out["pair"] = pair.str();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << pair.str() << "\n";
            }
            return exit_ok;
        };
    });

    CLI::App* dominance = app.add_subcommand("dominance", "Dominance relation between two pairs");
    dominance->add_option("--p", p, "Modulus")->required();
    dominance->add_option("--left", left_text, "Pair 'lambda|p*mu'")->required();
    dominance->add_option("--right", right_text, "Pair 'delta|p*xi'")->required();
    add_format(dominance);
    dominance->callback([&] {
        action = [&]() {
            gamma_m::Dominance rel =
                gamma_m::dominance_compare(gamma_m::PairPartition::parse(left_text, p),
                                         gamma_m::PairPartition::parse(right_text, p), p);
            if (format == "json") {
                gamma_m::json out;
                out["relation"] = gamma_m::to_string(rel);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << gamma_m::to_string(rel) << "\n";
            }
            return exit_ok;
        };
    });

    CLI::App* psi_cmd = app.add_subcommand("psi", "Involution image of h_alpha e_beta");
    psi_cmd->add_option("--m", m, "Truncation modulus")->required();
    psi_cmd->add_option("--h", h_text, "h-part composition");
    psi_cmd->add_option("--e", e_text, "e-part composition");
    psi_cmd->add_option("--guard", guard_flag, "Guard override");
    add_format(psi_cmd);
    psi_cmd->callback([&] {
        action = [&]() {
            int guard = resolve_guards(guard_flag).partitions;
            gamma_m::RingElement value = gamma_m::straighten_direct(
                gamma_m::Composition::parse(h_text), gamma_m::Composition::parse(e_text), m,
                guard);
            emit_element(gamma_m::psi(value, guard), format);
            return exit_ok;
        };
    });

    CLI::App* mult = app.add_subcommand("multiplicity",
                                        "Multiplicity of Y(target) in M(alpha|beta)");
    mult->add_option("--p", p, "Odd prime")->required();
    mult->add_option("--alpha", alpha_text, "h-part composition");
    mult->add_option("--beta", beta_text, "e-part composition");
    mult->add_option("--target", target_text, "Pair 'delta|p*xi'")->required();
    mult->add_option("--kostka", kostka_path, "Multiplicity table (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    mult->add_option("--guard", guard_flag, "Guard override");
    add_format(mult);
    mult->callback([&] {
        action = [&]() {
            std::ifstream in(kostka_path);
            if (!in) throw std::invalid_argument("cannot open " + kostka_path);
            gamma_m::KostkaTable table = gamma_m::kostka_from_json(gamma_m::json::parse(in));
            gamma_m::TransferResult result = gamma_m::transfer_multiplicity(
                gamma_m::Composition::parse(alpha_text), gamma_m::Composition::parse(beta_text),
                gamma_m::PairPartition::parse(target_text, p), table, p,
                resolve_guards(guard_flag).partitions);
            if (!result.consistent)
                std::cerr << "warning: negative multiplicity; the table is inconsistent\n";
            if (format == "json") {
                gamma_m::json out;
                out["multiplicity"] = result.multiplicity.str();
                out["consistent"] = result.consistent;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << result.multiplicity.str() << "\n";
            }
            return exit_ok;
        };
    });

    CLI::App* verify = app.add_subcommand("verify", "Cross-check expansions against the oracles");
    verify->add_option("--m", m, "Truncation modulus")->required();
    verify->add_option("--max-degree", max_degree, "Sweep bound")->capture_default_str();
    verify->add_option("--oracle", oracle, "Which suites to run")
        ->check(CLI::IsMember({"recursive", "determinant", "numeric", "identities", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "Seed for the numeric suite")->capture_default_str();
    verify->add_option("--trials", trials, "Trials in the numeric suite")->capture_default_str();
    verify->add_option("--guard", guard_flag, "Guard override");
    add_format(verify);
    verify->callback([&] {
        action = [&]() {
            Guards guards = resolve_guards(guard_flag);
            std::vector<gamma_m::SuiteResult> suites;
            if (oracle == "recursive" || oracle == "all")
                suites.push_back(gamma_m::run_recursive_suite(m, max_degree));
            if (oracle == "determinant" || oracle == "all")
                suites.push_back(gamma_m::run_determinant_suite(m, max_degree, guards.determinant));
            if (oracle == "numeric" || oracle == "all")
                suites.push_back(gamma_m::run_numeric_suite({m}, max_degree, trials, seed));
            if (oracle == "identities" || oracle == "all")
                for (gamma_m::SuiteResult& s :
                     gamma_m::run_identities_suite(m, max_degree, guards.enumeration))
                    suites.push_back(std::move(s));

            bool ok = true;
            for (const auto& s : suites) ok = ok && s.ok();
            if (format == "json") {
                std::cout << suites_to_json(suites).dump() << "\n";
            } else {
                for (const auto& s : suites) {
                    std::cout << s.name << ": " << s.passed << " passed, " << s.failed
                              << " failed\n";
                    for (const std::string& f : s.failures) std::cout << "  FAIL " << f << "\n";
                }
                std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
            }
            return ok ? exit_ok : exit_verify_failed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const gamma_m::guard_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_refusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
