#include <array>
#include <iostream>

#include <CLI11.hpp>

#include "cycdim/report.hpp"

namespace {

struct RangeOptions {
    CLI::Option* g = nullptr;
    CLI::Option* g_min = nullptr;
    CLI::Option* g_max = nullptr;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimension tables for the modular representations of the "
                 "symplectic groups Sp(2g, p) and their TQFT counterparts."};
    app.require_subcommand(1);

    cycdim::RunConfig config;
    long g_single = 1;

    auto add_common = [&](CLI::App* cmd) {
        RangeOptions opts;
        cmd->add_option("--p", config.p, "odd prime p (default 5)");
        opts.g = cmd->add_option("--g", g_single, "single genus (shorthand for --gmin N --gmax N)");
        opts.g_min = cmd->add_option("--gmin", config.g_min, "first genus of the range (default 1)");
        opts.g_max = cmd->add_option("--gmax", config.g_max, "last genus of the range");
        opts.g->excludes(opts.g_min);
        opts.g->excludes(opts.g_max);
        cmd->add_option("--format", config.format, "output format: text, csv or json (default text)");
        cmd->add_option("--out", config.out_path, "write the report to this file instead of stdout");
        return opts;
    };

    CLI::App* table = app.add_subcommand("table", "emit dimension values from every selected route");
    RangeOptions table_range = add_common(table);
    table->add_option("--what", config.what, "which side to tabulate: gow, tqft or all (default all)");
    table->add_option("--mode", config.mode, "which routes to run: exact, float or both (default exact)");

    CLI::App* verify = app.add_subcommand("verify", "run the matrix identities and route-agreement checks");
    RangeOptions verify_range = add_common(verify);

    CLI::App* compare = app.add_subcommand("compare", "compare the two dimension tuples per genus");
    RangeOptions compare_range = add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    }

    CLI::App* active = app.get_subcommands().front();
    config.command = active->get_name();
    const RangeOptions& range = active == table    ? table_range
                                : active == verify ? verify_range
                                                   : compare_range;
    if (range.g->count() > 0) {
        config.g_min = g_single;
        config.g_max = g_single;
    } else if (range.g_min->count() > 0 && range.g_max->count() == 0) {
        config.g_max = config.g_min;
    }

    return cycdim::run_cli(config, std::cout, std::cerr);
}
