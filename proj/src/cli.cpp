#include "schurcalc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "schurcalc/balmer.hpp"
#include "schurcalc/characters.hpp"
#include "schurcalc/json_io.hpp"
#include "schurcalc/lr.hpp"
#include "schurcalc/schur.hpp"
#include "schurcalc/verify.hpp"

namespace schurcalc {
namespace {

std::vector<Partition> parse_partition_list(const std::string& text) {
    std::vector<Partition> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t semi = text.find(';', pos);
        out.push_back(Partition::parse(text.substr(pos, semi == std::string::npos ? semi : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

void print_character_table_text(const CharacterTable& table, std::ostream& out) {
    size_t width = 6;
    for (const Partition& rho : table.labels()) width = std::max(width, rho.to_string().size() + 2);
    out << std::setw(static_cast<int>(width)) << "";
    for (const Partition& rho : table.labels()) out << std::setw(static_cast<int>(width)) << rho.to_string();
    out << "\n";
    for (size_t i = 0; i < table.labels().size(); ++i) {
        out << std::setw(static_cast<int>(width)) << table.labels()[i].to_string();
        for (size_t j = 0; j < table.labels().size(); ++j)
            out << std::setw(static_cast<int>(width)) << table.value(i, j);
        out << "\n";
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact partition, character and Schur-functor calculator"};
    app.require_subcommand(1);

    // Queued action so parsing errors never produce partial output.
    std::function<int()> action;

    // ---- transpose ----
    auto* transpose_cmd = app.add_subcommand("transpose", "Transpose a partition");
    auto transpose_lambda = std::make_shared<std::string>();
    auto transpose_json = std::make_shared<bool>(false);
    transpose_cmd->add_option("--lambda", *transpose_lambda, "partition, e.g. 5,2,2,1")->required();
    transpose_cmd->add_flag("--json", *transpose_json, "emit JSON");
    transpose_cmd->callback([&, transpose_lambda, transpose_json] {
        action = [&, transpose_lambda, transpose_json] {
            const Partition result = Partition::parse(*transpose_lambda).transposed();
            if (*transpose_json)
                out << to_json(result).dump() << "\n";
            else
                out << result.to_string() << "\n";
            return 0;
        };
    });

    // ---- dim ----
    auto* dim_cmd = app.add_subcommand("dim", "Dimension of the Specht module V_lambda");
    auto dim_lambda = std::make_shared<std::string>();
    auto dim_json = std::make_shared<bool>(false);
    dim_cmd->add_option("--lambda", *dim_lambda, "partition")->required();
    dim_cmd->add_flag("--json", *dim_json, "emit JSON");
    dim_cmd->callback([&, dim_lambda, dim_json] {
        action = [&, dim_lambda, dim_json] {
            const long long dim = specht_dim(Partition::parse(*dim_lambda));
            if (*dim_json)
                out << nlohmann::json(dim).dump() << "\n";
            else
                out << dim << "\n";
            return 0;
        };
    });

    // ---- char ----
    auto* char_cmd = app.add_subcommand("char", "Character values of the symmetric group");
    auto char_n = std::make_shared<int>(-1);
    auto char_lambda = std::make_shared<std::string>();
    auto char_rho = std::make_shared<std::string>();
    auto char_json = std::make_shared<bool>(false);
    char_cmd->add_option("--n", *char_n, "print the full character table of Sigma_n");
    char_cmd->add_option("--lambda", *char_lambda, "partition labeling the irreducible");
    char_cmd->add_option("--rho", *char_rho, "cycle type");
    char_cmd->add_flag("--json", *char_json, "emit JSON");
    char_cmd->callback([&, char_n, char_lambda, char_rho, char_json] {
        action = [&, char_n, char_lambda, char_rho, char_json] {
            if (*char_n >= 0) {
                const CharacterTable& table = CharacterTable::of(*char_n);
                if (*char_json)
                    out << to_json(table).dump() << "\n";
                else
                    print_character_table_text(table, out);
                return 0;
            }
            if (char_lambda->empty() || char_rho->empty())
                throw ParseError("char needs either --n or both --lambda and --rho");
            const long long value =
                mn_character(Partition::parse(*char_lambda), CycleType(Partition::parse(*char_rho)));
            if (*char_json)
                out << nlohmann::json(value).dump() << "\n";
            else
                out << value << "\n";
            return 0;
        };
    });

    // ---- lr ----
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient [outer : mu, nu]");
    auto lr_outer = std::make_shared<std::string>();
    auto lr_mu = std::make_shared<std::string>();
    auto lr_nu = std::make_shared<std::string>();
    auto lr_json = std::make_shared<bool>(false);
    lr_cmd->add_option("--outer", *lr_outer, "outer partition")->required();
    lr_cmd->add_option("--mu", *lr_mu, "first factor")->required();
    lr_cmd->add_option("--nu", *lr_nu, "second factor")->required();
    lr_cmd->add_flag("--json", *lr_json, "emit JSON");
    lr_cmd->callback([&, lr_outer, lr_mu, lr_nu, lr_json] {
        action = [&, lr_outer, lr_mu, lr_nu, lr_json] {
            const long long c = lr_coefficient(Partition::parse(*lr_outer), Partition::parse(*lr_mu),
                                               Partition::parse(*lr_nu));
            if (*lr_json)
                out << nlohmann::json(c).dump() << "\n";
            else
                out << c << "\n";
            return 0;
        };
    });

    // ---- kron ----
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker multiplicity [V_mu (x) V_nu : V_lambda]");
    auto kron_lambda = std::make_shared<std::string>();
    auto kron_mu = std::make_shared<std::string>();
    auto kron_nu = std::make_shared<std::string>();
    auto kron_json = std::make_shared<bool>(false);
    kron_cmd->add_option("--lambda", *kron_lambda, "target partition")->required();
    kron_cmd->add_option("--mu", *kron_mu, "first factor")->required();
    kron_cmd->add_option("--nu", *kron_nu, "second factor")->required();
    kron_cmd->add_flag("--json", *kron_json, "emit JSON");
    kron_cmd->callback([&, kron_lambda, kron_mu, kron_nu, kron_json] {
        action = [&, kron_lambda, kron_mu, kron_nu, kron_json] {
            const long long g = kronecker_multiplicity(Partition::parse(*kron_lambda), Partition::parse(*kron_mu),
                                                       Partition::parse(*kron_nu));
            if (*kron_json)
                out << nlohmann::json(g).dump() << "\n";
            else
                out << g << "\n";
            return 0;
        };
    });

    // ---- schur ----
    auto* schur_cmd = app.add_subcommand("schur", "Schur functor S_lambda applied to a graded object");
    auto schur_lambda = std::make_shared<std::string>();
    auto schur_object = std::make_shared<std::string>();
    auto schur_json = std::make_shared<bool>(false);
    schur_cmd->add_option("--lambda", *schur_lambda, "partition")->required();
    schur_cmd->add_option("--object", *schur_object, "graded object, e.g. \"-1:1,0:2\" (\"\" = zero)");
    schur_cmd->add_flag("--json", *schur_json, "emit JSON");
    schur_cmd->callback([&, schur_lambda, schur_object, schur_json] {
        action = [&, schur_lambda, schur_object, schur_json] {
            const GradedObject result =
                schur_of_object(Partition::parse(*schur_lambda), GradedObject::parse(*schur_object));
            if (*schur_json)
                out << to_json(result).dump() << "\n";
            else
                out << result.to_string() << "\n";
            return 0;
        };
    });

    // ---- hook ----
    auto* hook_cmd = app.add_subcommand("hook", "Hook criterion: S_lambda kills 1^p + Sigma 1^q?");
    auto hook_lambda = std::make_shared<std::string>();
    auto hook_p = std::make_shared<int>(0);
    auto hook_q = std::make_shared<int>(0);
    auto hook_json = std::make_shared<bool>(false);
    hook_cmd->add_option("--lambda", *hook_lambda, "partition")->required();
    hook_cmd->add_option("--p", *hook_p, "copies of the unit")->required()->check(CLI::NonNegativeNumber);
    hook_cmd->add_option("--q", *hook_q, "copies of the shifted unit")->required()->check(CLI::NonNegativeNumber);
    hook_cmd->add_flag("--json", *hook_json, "emit JSON");
    hook_cmd->callback([&, hook_lambda, hook_p, hook_q, hook_json] {
        action = [&, hook_lambda, hook_p, hook_q, hook_json] {
            if (*hook_p + *hook_q < 1) throw ParseError("hook requires p + q >= 1");
            const bool vanishes = hook_vanishing_test(Partition::parse(*hook_lambda), *hook_p, *hook_q);
            if (*hook_json)
                out << nlohmann::json(vanishes).dump() << "\n";
            else
                out << (vanishes ? "true" : "false") << "\n";
            return 0;
        };
    });

    // ---- rect-lr ----
    auto* rect_cmd = app.add_subcommand("rect-lr", "Support of the product of two rectangles");
    auto rect_p = std::make_shared<int>(0);
    auto rect_q = std::make_shared<int>(0);
    auto rect_r = std::make_shared<int>(0);
    auto rect_s = std::make_shared<int>(0);
    auto rect_json = std::make_shared<bool>(false);
    rect_cmd->add_option("--p", *rect_p, "width of the first rectangle")->required()->check(CLI::PositiveNumber);
    rect_cmd->add_option("--q", *rect_q, "rows of the first rectangle")->required()->check(CLI::PositiveNumber);
    rect_cmd->add_option("--r", *rect_r, "width of the second rectangle")->required()->check(CLI::PositiveNumber);
    rect_cmd->add_option("--s", *rect_s, "rows of the second rectangle")->required()->check(CLI::PositiveNumber);
    rect_cmd->add_flag("--json", *rect_json, "emit JSON");
    rect_cmd->callback([&, rect_p, rect_q, rect_r, rect_s, rect_json] {
        action = [&, rect_p, rect_q, rect_r, rect_s, rect_json] {
            const std::vector<Partition> support = rectangular_lr_support(*rect_p, *rect_q, *rect_r, *rect_s);
            if (*rect_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Partition& lambda : support) arr.push_back(to_json(lambda));
                out << arr.dump() << "\n";
            } else {
                for (const Partition& lambda : support) out << lambda.to_string() << "\n";
            }
            return 0;
        };
    });

    // ---- primes ----
    auto* primes_cmd = app.add_subcommand("primes", "Enumerate prime ideal truncations");
    auto primes_n = std::make_shared<int>(5);
    auto primes_json = std::make_shared<bool>(false);
    primes_cmd->add_option("--max-size", *primes_n, "truncation size (<= 6)");
    primes_cmd->add_flag("--json", *primes_json, "emit JSON");
    primes_cmd->callback([&, primes_n, primes_json] {
        action = [&, primes_n, primes_json] {
            const std::vector<IdealTruncation> passing = enumerate_prime_truncations(*primes_n);
            nlohmann::json results = nlohmann::json::array();
            long long spurious = 0;
            for (const IdealTruncation& s : passing) {
                const Classification c = classify(s);
                if (c.kind == Classification::Kind::NotPrime) ++spurious;
                results.push_back(
                    nlohmann::json{{"truncation", to_json(s)}, {"classification", to_json(c)}});
            }
            if (*primes_json) {
                out << nlohmann::json{{"max_size", *primes_n},
                                      {"passing", results},
                                      {"spurious_count", spurious}}
                           .dump()
                    << "\n";
            } else {
                for (const auto& entry : results) {
                    const auto& c = entry["classification"];
                    if (c["result"] == "zero")
                        out << "zero ideal\n";
                    else if (c["result"] == "prime")
                        out << "prime (" << c["p"].get<int>() << "," << c["q"].get<int>()
                            << "): " << entry["truncation"]["members"].dump() << "\n";
                    else
                        out << "spurious (truncation artifact): " << entry["truncation"]["members"].dump() << "\n";
                }
                out << "passing=" << results.size() << " spurious=" << spurious << "\n";
            }
            return 0;
        };
    });

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand("classify", "Classify an ideal truncation");
    auto classify_n = std::make_shared<int>(0);
    auto classify_members = std::make_shared<std::string>();
    auto classify_generators = std::make_shared<std::string>();
    auto classify_json = std::make_shared<bool>(false);
    classify_cmd->add_option("--max-size", *classify_n, "truncation size (<= 6)")->required();
    auto* members_opt =
        classify_cmd->add_option("--members", *classify_members, "semicolon-separated members, \"\" = zero ideal");
    auto* generators_opt = classify_cmd->add_option("--generators", *classify_generators,
                                                    "semicolon-separated generators (closure taken)");
    classify_cmd->add_flag("--json", *classify_json, "emit JSON");
    classify_cmd->callback([&, classify_n, classify_members, classify_generators, classify_json, members_opt,
                            generators_opt] {
        action = [&, classify_n, classify_members, classify_generators, classify_json, members_opt, generators_opt] {
            const bool have_members = members_opt->count() > 0;
            const bool have_generators = generators_opt->count() > 0;
            if (have_members == have_generators)
                throw ParseError("classify needs exactly one of --members or --generators");
            IdealTruncation s = have_generators
                                    ? ideal_closure(parse_partition_list(*classify_generators), *classify_n)
                                    : IdealTruncation(*classify_n,
                                                      [&] {
                                                          std::set<Partition> members;
                                                          for (Partition& p : parse_partition_list(*classify_members))
                                                              members.insert(std::move(p));
                                                          return members;
                                                      }());
            const Classification c = classify(s);
            if (*classify_json) {
                out << to_json(c).dump() << "\n";
            } else {
                switch (c.kind) {
                    case Classification::Kind::Zero:
                        out << "zero\n";
                        break;
                    case Classification::Kind::Prime:
                        out << "prime (" << c.label.p << "," << c.label.q << ")\n";
                        break;
                    case Classification::Kind::NotPrime:
                        out << "not_prime";
                        if (c.witness)
                            out << " witness mu=" << c.witness->mu.to_string() << " nu=" << c.witness->nu.to_string();
                        out << "\n";
                        break;
                }
            }
            return 0;
        };
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    auto verify_suite = std::make_shared<std::string>("all");
    auto verify_max_n = std::make_shared<int>(-1);
    auto verify_json = std::make_shared<bool>(false);
    auto verify_out_path = std::make_shared<std::string>();
    verify_cmd->add_option("--suite", *verify_suite, "suite name or 'all'");
    verify_cmd->add_option("--max-n", *verify_max_n, "override the principal size bound");
    verify_cmd->add_flag("--json", *verify_json, "emit JSON");
    verify_cmd->add_option("--out", *verify_out_path, "write the report to a file instead of stdout");
    verify_cmd->callback([&, verify_suite, verify_max_n, verify_json, verify_out_path] {
        action = [&, verify_suite, verify_max_n, verify_json, verify_out_path] {
            SuiteOptions options;
            if (*verify_max_n >= 0) options.max_n = *verify_max_n;
            std::vector<VerificationReport> reports;
            if (*verify_suite == "all")
                reports = run_all_suites(options);
            else
                reports.push_back(run_suite(*verify_suite, options));

            std::string rendered;
            if (*verify_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const VerificationReport& r : reports) arr.push_back(to_json(r));
                rendered = arr.dump() + "\n";
            } else {
                for (const VerificationReport& r : reports) {
                    rendered += r.suite + ": " + (r.passed ? "passed" : "FAILED") +
                                " checked=" + std::to_string(r.checked);
                    for (const auto& [key, value] : r.details) rendered += " " + key + "=" + value;
                    rendered += "\n";
                    for (const std::string& cx : r.counterexamples) rendered += "  counterexample: " + cx + "\n";
                }
            }
            if (verify_out_path->empty()) {
                out << rendered;
            } else {
                std::ofstream file(*verify_out_path);
                if (!file) throw ParseError("cannot open --out file " + *verify_out_path);
                file << rendered;
            }
            const bool all_passed =
                std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
            return all_passed ? 0 : 2;
        };
    });

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        return action ? action() : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace schurcalc
