// Command-line surface for the sweep/lattice library. Every pipeline stage
// is exposed as a subcommand; words come from a positional argument or, with
// "-", from standard input one per line.
//
// Exit codes: 0 success, 1 domain errors (bad word, non-Dyck input, failed
// inversion), 2 usage errors, 3 invariant violations and failed
// verifications.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sweeplat/jsonio.hpp"
#include "sweeplat/sweeplat.hpp"

namespace {

using namespace sweeplat;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

/// Apply fn to the positional argument, or to each stdin line when it is
/// "-".
void for_each_input(const std::string& arg, const std::function<void(const std::string&)>& fn) {
    if (arg != "-") {
        fn(arg);
        return;
    }
    std::string line;
    while (std::getline(std::cin, line)) fn(line);
}

std::pair<int, int> parse_ab(const std::string& text) {
    const auto parts = detail::split(text, ',');
    detail::require(parts.size() == 2, "--ab: expected two comma-separated integers");
    return {detail::parse_int(parts[0], "--ab"), detail::parse_int(parts[1], "--ab")};
}

Content parse_content(const std::string& text) {
    std::vector<std::pair<int, int>> items;
    for (const auto& tok : detail::split(text, ',')) {
        const auto kv = detail::split(tok, ':');
        detail::require(kv.size() == 2, "--content: expected value:multiplicity pairs");
        items.emplace_back(detail::parse_int(kv[0], "--content"),
                           detail::parse_int(kv[1], "--content"));
    }
    return Content(std::move(items));
}

struct Options {
    int modulus = 0;
    int hours = 0;
    int len = 0;
    std::string input;
    std::string from;
    std::string starts;
    std::string content;
    std::vector<std::string> ab;
    long long budget = 1'000'000;
    bool trace = false;
    bool dot = false;
    bool json = false;
    bool ascii = false;
    bool enumerate = false;
};

int run_verify_report(const VerifyReport& report, bool json) {
    if (json)
        std::cout << verify_report_json(report).dump(2) << "\n";
    else
        std::cout << report.render_text();
    return report.all_pass() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sweep maps, equitable partitions, and their lattice"};
    app.require_subcommand(1);
    Options opt;
    std::function<int()> action;

    auto add_mod_word_cmd = [&](const std::string& name, const std::string& desc,
                                std::function<int()> act) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--mod", opt.modulus, "modulus m")->required();
        cmd->add_option("word", opt.input, "word, or - for stdin")->required();
        cmd->callback([&action, act] { action = act; });
        return cmd;
    };

    add_mod_word_cmd("sweep", "modular sweep of a word", [&] {
        for_each_input(opt.input, [&](const std::string& s) {
            std::cout << format_mod_word(sweep_mod(parse_mod_word(s, opt.modulus))) << "\n";
        });
        return kExitOk;
    });

    add_mod_word_cmd("unsweep", "inverse modular sweep", [&] {
        for_each_input(opt.input, [&](const std::string& s) {
            std::cout << format_mod_word(unsweep_mod(parse_mod_word(s, opt.modulus))) << "\n";
        });
        return kExitOk;
    });

    add_mod_word_cmd("presweep", "split a word into level-indexed blocks", [&] {
        for_each_input(opt.input, [&](const std::string& s) {
            std::cout << format_partitioned_word(presweep(parse_mod_word(s, opt.modulus)))
                      << "\n";
        });
        return kExitOk;
    });

    {
        CLI::App* cmd = app.add_subcommand("unpresweep", "invert the presweep of a partitioned word");
        cmd->add_option("--mod", opt.modulus, "modulus m")->required();
        cmd->add_option("word", opt.input, "partitioned word, or - for stdin")->required();
        cmd->callback([&] {
            action = [&]() -> int {
                int rc = kExitOk;
                for_each_input(opt.input, [&](const std::string& s) {
                    const auto res = inverse_presweep(parse_partitioned_word(s, opt.modulus));
                    if (const ModWord* w = std::get_if<ModWord>(&res)) {
                        std::cout << format_mod_word(*w) << "\n";
                    } else {
                        std::cout << format_partitioned_word(
                                         std::get<PresweepFailure>(res).residue)
                                  << "\n";
                        rc = kExitDomain;
                    }
                });
                return rc;
            };
        });
    }

    {
        CLI::App* cmd = add_mod_word_cmd("rightmost", "rightmost equitable partition", [&] {
            for_each_input(opt.input, [&](const std::string& s) {
                std::vector<MoveStep> steps;
                const PartitionedWord p =
                    rightmost_traced(parse_mod_word(s, opt.modulus), opt.trace ? &steps : nullptr);
                for (const auto& st : steps)
                    std::cout << "move column=" << st.column << " letter=" << st.letter_index
                              << "\n";
                std::cout << format_partitioned_word(p) << "\n";
            });
            return kExitOk;
        });
        cmd->add_flag("--trace", opt.trace, "print each move");
    }

    {
        CLI::App* cmd = add_mod_word_cmd("leftmost", "leftmost equitable partition", [&] {
            for_each_input(opt.input, [&](const std::string& s) {
                std::vector<MoveStep> steps;
                const PartitionedWord p =
                    leftmost_traced(parse_mod_word(s, opt.modulus), opt.trace ? &steps : nullptr);
                for (const auto& st : steps)
                    std::cout << "move column=" << st.column << " letter=" << st.letter_index
                              << "\n";
                std::cout << format_partitioned_word(p) << "\n";
            });
            return kExitOk;
        });
        cmd->add_flag("--trace", opt.trace, "print each move");
    }

    {
        CLI::App* cmd = add_mod_word_cmd(
            "successful", "successful partition, converging from an equitable start", [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    const ModWord u = parse_mod_word(s, opt.modulus);
                    const PartitionedWord start = opt.from.empty()
                                                      ? leftmost(u)
                                                      : parse_partitioned_word(opt.from, opt.modulus);
                    detail::require(start.word() == u,
                                    "successful: --from partitions a different word");
                    std::vector<PartitionedWord> rounds;
                    const PartitionedWord p =
                        successful_from_traced(start, opt.trace ? &rounds : nullptr);
                    for (const auto& r : rounds)
                        std::cout << "round " << format_partitioned_word(r) << "\n";
                    std::cout << format_partitioned_word(p) << "\n";
                });
                return kExitOk;
            });
        cmd->add_option("--from", opt.from, "equitable starting partition (default: leftmost)");
        cmd->add_flag("--trace", opt.trace, "print each round's partition");
    }

    {
        CLI::App* cmd = add_mod_word_cmd("lattice", "lattice of all equitable partitions", [&] {
            for_each_input(opt.input, [&](const std::string& s) {
                const EqLattice lat = enumerate_lattice(parse_mod_word(s, opt.modulus));
                if (opt.dot) {
                    std::cout << hasse_dot(lat);
                } else if (opt.json) {
                    std::cout << lattice_json(lat).dump(2) << "\n";
                } else {
                    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
                        std::cout << i << " "
                                  << format_partitioned_word(
                                         lat.node_partition(static_cast<int>(i)))
                                  << "\n";
                    for (auto [lo, hi] : lat.cover_edges)
                        std::cout << lo << " < " << hi << "\n";
                    std::cout << "bottom " << lat.bottom << " top " << lat.top << "\n";
                }
            });
            return kExitOk;
        });
        cmd->add_flag("--dot", opt.dot, "emit a DOT digraph");
        cmd->add_flag("--json", opt.json, "emit JSON {nodes, covers, bottom, top}");
    }

    {
        CLI::App* cmd = app.add_subcommand("array", "render the balancing array of a partitioned word");
        cmd->add_option("--mod", opt.modulus, "modulus m")->required();
        cmd->add_option("word", opt.input, "partitioned word, or - for stdin")->required();
        cmd->add_flag("--ascii", opt.ascii, "use '#'/'.' instead of the box symbols");
        cmd->callback([&] {
            action = [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    std::cout << balancing_array(parse_partitioned_word(s, opt.modulus))
                                     .render(opt.ascii);
                });
                return kExitOk;
            };
        });
    }

    auto add_int_word_cmd = [&](const std::string& name, const std::string& desc,
                                std::function<int()> act) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--content", opt.content, "letter content as value:multiplicity,...")
            ->required();
        cmd->add_option("word", opt.input, "integer word, or - for stdin")->required();
        cmd->callback([&action, act] { action = act; });
        return cmd;
    };

    add_int_word_cmd("zsweep", "sweep of an integer word", [&] {
        const Content c = parse_content(opt.content);
        for_each_input(opt.input, [&](const std::string& s) {
            const IntWord w(c, parse_signed_letters(s));
            std::cout << format_signed_letters(sweep_int(w).letters()) << "\n";
        });
        return kExitOk;
    });

    add_int_word_cmd("unzsweep", "inverse sweep of an integer word", [&] {
        const Content c = parse_content(opt.content);
        for_each_input(opt.input, [&](const std::string& s) {
            const IntWord w(c, parse_signed_letters(s));
            std::cout << format_signed_letters(unsweep_int(w).letters()) << "\n";
        });
        return kExitOk;
    });

    auto add_zeta_cmd = [&](const std::string& name, const std::string& desc, bool inverse) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--ab", opt.ab, "rational parameters a,b (a > 0 > b)")->required();
        cmd->add_option("word", opt.input, "integer Dyck word, or - for stdin")->required();
        cmd->callback([&action, &opt, inverse] {
            action = [&opt, inverse] {
                detail::require(opt.ab.size() == 1, "expected exactly one --ab");
                const auto [a, b] = parse_ab(opt.ab.front());
                const DyckParams p(a, b);
                for_each_input(opt.input, [&](const std::string& s) {
                    const IntWord w(p.content(), parse_signed_letters(s));
                    const IntWord out = inverse ? unzeta(w, p) : zeta(w, p);
                    std::cout << format_signed_letters(out.letters()) << "\n";
                });
                return kExitOk;
            };
        });
    };
    add_zeta_cmd("zeta", "zeta map on rational Dyck words", false);
    add_zeta_cmd("unzeta", "inverse zeta map", true);

    {
        CLI::App* dyck = app.add_subcommand("dyck", "Dyck words of a content");
        dyck->require_subcommand(1);
        CLI::App* filt = dyck->add_subcommand("filter", "keep input words whose levels stay nonnegative");
        filt->add_option("--content", opt.content, "optional content to validate against");
        filt->add_option("word", opt.input, "integer word, or - for stdin")->required();
        filt->callback([&] {
            action = [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    IntWord w = IntWord::from_letters(parse_signed_letters(s));
                    if (!opt.content.empty())
                        detail::require(w.content() == parse_content(opt.content),
                                        "dyck filter: word does not realize --content");
                    if (is_dyck(w)) std::cout << format_signed_letters(w.letters()) << "\n";
                });
                return kExitOk;
            };
        });
        CLI::App* enumer = dyck->add_subcommand("enumerate", "list all Dyck words of a content");
        enumer->add_option("--content", opt.content, "letter content as value:multiplicity,...");
        enumer->add_option("--ab", opt.ab, "rational parameters a,b");
        enumer->callback([&] {
            action = [&] {
                detail::require(opt.content.empty() != opt.ab.empty(),
                                "dyck enumerate: give exactly one of --content, --ab");
                Content c;
                if (!opt.content.empty()) {
                    c = parse_content(opt.content);
                } else {
                    detail::require(opt.ab.size() == 1, "expected exactly one --ab");
                    const auto [a, b] = parse_ab(opt.ab.front());
                    c = DyckParams(a, b).content();
                }
                for (const auto& w : enumerate_dyck(c))
                    std::cout << format_signed_letters(w.letters()) << "\n";
                return kExitOk;
            };
        });
    }

    {
        CLI::App* sched = app.add_subcommand("schedule", "equitable task schedules");
        sched->require_subcommand(1);

        CLI::App* latest = sched->add_subcommand("latest", "the unique successful schedule");
        latest->add_option("--hours", opt.hours, "hours per day")->required();
        latest->add_option("lengths", opt.input, "task lengths, or - for stdin")->required();
        latest->callback([&] {
            action = [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    const Schedule sc = schedule_latest(opt.hours, parse_letters(s, opt.hours));
                    std::cout << format_signed_letters(sc.starts) << "\n";
                });
                return kExitOk;
            };
        });

        CLI::App* all = sched->add_subcommand("all", "every equitable schedule, earliest to latest");
        all->add_option("--hours", opt.hours, "hours per day")->required();
        all->add_option("lengths", opt.input, "task lengths, or - for stdin")->required();
        all->add_flag("--json", opt.json, "emit JSON schedule objects");
        all->callback([&] {
            action = [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    const auto schedules = schedule_all(opt.hours, parse_letters(s, opt.hours));
                    if (opt.json) {
                        nlohmann::json arr = nlohmann::json::array();
                        for (const auto& sc : schedules)
                            arr.push_back(schedule_json(sc, inspector_check(sc).successful));
                        std::cout << arr.dump(2) << "\n";
                    } else {
                        for (const auto& sc : schedules)
                            std::cout << format_signed_letters(sc.starts) << "\n";
                    }
                });
                return kExitOk;
            };
        });

        CLI::App* check = sched->add_subcommand("check", "can the inspector watch every task?");
        check->add_option("--hours", opt.hours, "hours per day")->required();
        check->add_option("--starts", opt.starts, "start hours, nondecreasing")->required();
        check->add_option("lengths", opt.input, "task lengths, or - for stdin")->required();
        check->add_flag("--json", opt.json, "emit a JSON schedule object");
        check->callback([&] {
            action = [&] {
                for_each_input(opt.input, [&](const std::string& s) {
                    Schedule sc;
                    sc.hours = opt.hours;
                    sc.lengths = parse_letters(s, opt.hours);
                    sc.starts = parse_signed_letters(opt.starts);
                    const InspectorResult res = inspector_check(sc);
                    if (opt.json) {
                        std::cout << schedule_json(sc, res.successful).dump(2) << "\n";
                    } else {
                        std::cout << (res.successful ? "successful" : "unsuccessful") << "\n";
                        std::cout << "watched: " << format_signed_letters(res.watch_order)
                                  << "\n";
                    }
                });
                return kExitOk;
            };
        });
    }

    {
        CLI::App* verify = app.add_subcommand("verify", "exhaustive small-instance verification");
        verify->require_subcommand(1);

        CLI::App* bij = verify->add_subcommand("bijective", "sweep bijectivity over all m^N words");
        bij->add_option("--mod", opt.modulus, "modulus m")->required();
        bij->add_option("--len", opt.len, "word length N")->required();
        bij->add_flag("--json", opt.json, "emit a JSON report");
        bij->add_option("--budget", opt.budget, "maximum words to enumerate");
        bij->callback([&] {
            action = [&] {
                VerifyBudget budget;
                budget.max_words = opt.budget;
                return run_verify_report(verify_sweep_bijective(opt.modulus, opt.len, budget),
                                         opt.json);
            };
        });

        CLI::App* thm = verify->add_subcommand("theorems", "equitable-partition theorems over all words");
        thm->add_option("--mod", opt.modulus, "modulus m")->required();
        thm->add_option("--len", opt.len, "word length N")->required();
        thm->add_flag("--json", opt.json, "emit a JSON report");
        thm->add_option("--budget", opt.budget, "maximum words to enumerate");
        thm->callback([&] {
            action = [&] {
                VerifyBudget budget;
                budget.max_words = opt.budget;
                budget.max_partitions_per_word = opt.budget;
                return run_verify_report(verify_theorems(opt.modulus, opt.len, budget), opt.json);
            };
        });

        CLI::App* zet = verify->add_subcommand("zeta", "zeta-map checks on rational Dyck sets");
        zet->add_option("--ab", opt.ab, "rational parameters a,b (repeatable)")->required();
        zet->add_flag("--json", opt.json, "emit a JSON report");
        zet->add_option("--budget", opt.budget, "maximum Dyck words per parameter pair");
        zet->callback([&] {
            action = [&] {
                std::vector<DyckParams> params;
                for (const auto& s : opt.ab) {
                    const auto [a, b] = parse_ab(s);
                    params.emplace_back(a, b);
                }
                VerifyBudget budget;
                budget.max_words = opt.budget;
                return run_verify_report(verify_zeta(params, budget), opt.json);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
