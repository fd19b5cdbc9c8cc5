// absirr: command-line front end.

#include <CLI11.hpp>

#include <iostream>

#include "absirr/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace absirr::cli;
    CLI::App app{"Irreducible, prime and absolutely irreducible elements of Krull monoids"};
    app.require_subcommand(1);

    CommandOptions opts;
    std::string command;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--machine", opts.machine, "JSON report with sorted keys");
        sub->add_option("--budget", opts.budget, "node budget for every search")->check(CLI::PositiveNumber);
        sub->add_flag("--parallel", opts.parallel, "parallel factorization search");
        sub->callback([&command, sub] { command = sub->get_name(); });
    };
    const auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", opts.spec_path, "spec file (JSON)")->required(); };
    const auto add_sequence = [&](CLI::App* sub) {
        sub->add_option("--sequence", opts.sequence, "exponent list \"[1,0,2]\" or labels \"e1 e2 -f\", \"g^3\"")
            ->required();
    };

    auto* atoms = app.add_subcommand("atoms", "list the atoms of B(G0)");
    add_spec(atoms);
    add_common(atoms);

    auto* factor = app.add_subcommand("factor", "all factorizations of a zero-sum sequence");
    add_spec(factor);
    add_sequence(factor);
    add_common(factor);

    auto* lengths = app.add_subcommand("lengths", "length set and elasticity");
    add_spec(lengths);
    add_sequence(lengths);
    add_common(lengths);

    auto* absirred = app.add_subcommand("absirred", "absolute irreducibility of an atom");
    add_spec(absirred);
    add_sequence(absirred);
    absirred->add_option("--nmax", opts.nmax, "brute-force exponent bound (default 4)")->check(CLI::PositiveNumber);
    add_common(absirred);

    auto* classify = app.add_subcommand("classify", "scenario row (non-abs-irred, abs-irred non-prime, prime)");
    add_spec(classify);
    classify->add_option("--bound", opts.bound, "support bound for the family search (default 4)")
        ->check(CLI::PositiveNumber);
    add_common(classify);

    auto* verify = app.add_subcommand("verify", "run the bundled suite of known examples");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }
    return run_command(command, opts, std::cout, std::cerr);
}
