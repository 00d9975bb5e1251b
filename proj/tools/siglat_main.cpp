#include "siglat/dsl/parser.hpp"
#include "siglat/dsl/typecheck.hpp"
#include "siglat/report.hpp"
#include "siglat/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using siglat::report::kExitError;
using siglat::report::kExitOk;
using siglat::report::kExitViolation;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

siglat::dsl::Script load_script(const std::string& path) {
    return siglat::dsl::parse(slurp(path));
}

int emit(const siglat::report::RunOutcome& outcome) {
    std::cout << outcome.text;
    return outcome.exit_code;
}

int run_verify_paper() {
    std::vector<siglat::verify::Item> items = siglat::verify::run_suite();
    std::cout << siglat::verify::format_lines(items);
    return siglat::verify::all_passed(items) ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite sigma-algebra calculus and identity miner"};
    app.require_subcommand(1);

    std::string check_file;
    CLI::App* cmd_check = app.add_subcommand("check", "evaluate checks under let assignments");
    cmd_check->add_option("file", check_file, "script file")->required();

    std::string mine_file;
    int max_ground = 3;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t limit = 1000;
    int workers = 0;
    bool json_output = false;
    CLI::App* cmd_mine = app.add_subcommand("mine", "search for counterexamples to checks");
    cmd_mine->add_option("file", mine_file, "script file")->required();
    cmd_mine->add_option("--max-ground", max_ground, "per-space ground size bound");
    cmd_mine->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    cmd_mine->add_option("--seed", seed, "random-mode seed")->each([&](const std::string&) {
        seed_given = true;
    });
    cmd_mine->add_option("--limit", limit, "random-mode trial budget");
    cmd_mine->add_option("--workers", workers, "worker threads (0 = hardware)");
    cmd_mine->add_flag("--json", json_output, "machine-readable output");

    std::string atoms_file;
    CLI::App* cmd_atoms = app.add_subcommand("atoms", "print evaluated atoms of each check side");
    cmd_atoms->add_option("file", atoms_file, "script file")->required();

    app.add_subcommand("verify-paper", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }

    try {
        if (cmd_check->parsed()) return emit(siglat::report::run_check(load_script(check_file)));
        if (cmd_mine->parsed()) {
            if (max_ground < 1) {
                std::cerr << "mine: --max-ground must be at least 1\n";
                return kExitError;
            }
            siglat::dsl::MineOptions options;
            options.max_ground = max_ground;
            options.mode = mode == "random" ? siglat::dsl::SearchMode::Random
                                            : siglat::dsl::SearchMode::Exhaustive;
            if (seed_given) options.seed = seed;
            options.limit = limit;
            options.workers = workers;
            siglat::dsl::Script script = load_script(mine_file);
            return emit(json_output ? siglat::report::run_mine_json(script, options)
                                    : siglat::report::run_mine(script, options));
        }
        if (cmd_atoms->parsed()) return emit(siglat::report::run_atoms(load_script(atoms_file)));
        return run_verify_paper();
    } catch (const siglat::dsl::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const siglat::dsl::TypeError& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
